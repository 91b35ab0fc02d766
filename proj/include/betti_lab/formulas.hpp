#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "betti_lab/diagram.hpp"

/// Closed-form predictions for GA(t,k)' and GA(t,k). Arithmetic only: nothing
/// here builds a graph or a complex, so these values never share a code path
/// with the Hochster engine they are checked against.
namespace betti::formulas {

std::uint64_t binomial(int n, int r);

/// n = t(k-1) + 2.
int vertex_count(int t, int k);

/// Induced K_{a,b} count in GA(t,k)': n C(k-2, a+b-1), halved when a = b.
/// Stated for t, k >= 3. Throws unless 0 < a <= b.
std::uint64_t kab(int t, int k, int a, int b);

/// beta_{i,i+2} = n C(k-2, i+1) (i+1)/2. Follows from kab, so it only holds
/// for t, k >= 3 (GA(2,6)' already differs).
std::uint64_t linear_strand(int t, int k, int i);

/// Number of induced matchings of maximum size: n(t(k-3)+1)/2 for k >= 4,
/// and 1 for k = 3 (the whole graph is (t+1)K_2).
std::uint64_t matching_count(int t, int k);
/// t for k >= 4, t + 1 for k = 3, 0 for k = 2.
int matching_number(int t, int k);

int regularity(int t);
int projective_dimension(int t, int k);
/// beta_{i,n}: 1 at i = n-t-2, else 0.
std::uint64_t last_row_entry(int t, int k, int i);
/// beta_{i,n-2}: n(t(k-3)+1)/2 at i = n-t-3, else 0.
std::uint64_t penultimate_diagonal_entry(int t, int k, int i);
/// Vertex connectivity of the complement of GA(t,k)': (t-1)(k-1)+2.
int complement_connectivity(int t, int k);

/// Whether beta_{i,j} of GA(t,k)' is forced to vanish by the regularity,
/// diagonal n-1, diagonal n-2 and window statements. Returns false where
/// nothing is predicted.
bool predicted_zero(int t, int k, int i, int j);

/// GA(t,3)' = (t+1)K_2: beta_{i,2i+2} = C(t+1, i+1) for 0 <= i <= t.
BettiDiagram k3_diagram(int t);

/// Support of the diagram of GA(3,k)' in (column, row) coordinates.
DiagramShape t3_shape(int k);

/// Conjectured support for t, k >= 3: rows 2..t+1 with j-2 <= i <= (j-1)(k-2)-1,
/// plus the corner (t(k-2), t+2).
DiagramShape conjecture_shape(int t, int k);

/// Claimed (reg, pd) of the undeleted graph GA(t,k): (t, t(k-2)+2).
std::pair<int, int> ga_full_invariants(int t, int k);

/// x -> (t+1)x mod n' placing GA(t,k) inside GA(t,k')', n' = t(k'-1)+2.
/// Throws std::invalid_argument unless k' > t(k-1) + k + 1.
std::vector<int> embedding_map(int t, int k, int k_prime);

struct FormulaReport {
  std::string quantity;
  std::map<std::string, int> params;
  std::uint64_t predicted = 0;
  std::string source;
};

/// Every scalar prediction that applies to GA(t,k)'. Deterministic order.
std::vector<FormulaReport> predictions(int t, int k);

}  // namespace betti::formulas
