#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "betti_lab/complex.hpp"
#include "betti_lab/diagram.hpp"
#include "betti_lab/graph.hpp"
#include "betti_lab/linalg.hpp"

namespace betti {

/// Subset enumeration costs 2^n homology computations; refused past the cap.
class ComputeCapError : public std::runtime_error {
 public:
  ComputeCapError(int vertices, int cap);
  int vertices() const { return vertices_; }
  int cap() const { return cap_; }
  /// Number of induced subgraphs the run would have visited.
  std::uint64_t estimated_subsets() const;

 private:
  int vertices_;
  int cap_;
};

struct HochsterOptions {
  /// OpenMP team size; values <= 0 use the runtime default.
  int threads = 0;
  int max_vertices = 20;
};

/// beta_{i,i+j}(I(G)) = sum over induced W with i+j vertices of dim H_{j-2}(Delta(W)).
///
/// Subsets are split across an OpenMP team with per-thread accumulators that
/// are summed at the end, so the result does not depend on scheduling. Each
/// subset's homology goes through induced_homology (reductions first).
BettiDiagram hochster_betti(const Graph& g, const FieldSpec& field, const HochsterOptions& options = {});

/// Hochster's formula for an arbitrary Stanley-Reisner ideal I_Delta over the
/// universe of `delta`: beta_{i,j} = sum over |W| = j of dim H_{j-i-2}(Delta_W).
/// Serial; meant for small universes.
BettiDiagram hochster_betti_complex(const SimplicialComplex& delta, const FieldSpec& field,
                                    int max_universe = 14);

/// beta_{i,i+2} from component counts of complements of induced subgraphs,
/// for i = 0..n-2. No homology involved.
std::vector<std::uint64_t> linear_strand_rvt(const Graph& g);

/// beta_{i,2(i+1)} as the number of induced matchings with i+1 edges, for
/// i = 0..floor(n/2)-1.
std::vector<std::uint64_t> main_diagonal_katzman(const Graph& g);

/// Betti numbers of the Alexander dual ideal I(G)^v via links:
/// beta_{i,m} = sum over independent F with |F| = n-m of dim H_{i-1}(link F),
/// using link F = Delta(G \ N[F]). nullopt when G has no edges (zero ideal).
std::optional<BettiDiagram> dual_betti_via_links(const Graph& g, const FieldSpec& field,
                                                 const HochsterOptions& options = {});

/// Right-hand side of the dual-Betti upper bound
/// beta_{i,m}(I^v) <= sum_{a=0}^{n-m} C(m+a, a) beta_{m-i-1, m+a}(I).
std::uint64_t dual_betti_upper_bound(const BettiDiagram& primal, int i, int m);

}  // namespace betti
