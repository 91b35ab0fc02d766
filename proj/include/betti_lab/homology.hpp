#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "betti_lab/complex.hpp"
#include "betti_lab/graph.hpp"
#include "betti_lab/linalg.hpp"

namespace betti {

/// Dimensions of reduced homology groups, indexed by degree from -1 upward.
/// Trailing zeros are dropped, so equal profiles compare equal.
class HomologyProfile {
 public:
  /// Acyclic profile.
  HomologyProfile() = default;

  /// dims[0] is degree -1, dims[1] degree 0, and so on.
  static HomologyProfile from_dims(std::vector<std::uint64_t> dims);
  /// Profile of the void complex: all zero, flagged void.
  static HomologyProfile void_profile();
  /// Single copy of the field in `degree`.
  static HomologyProfile concentrated(int degree, std::uint64_t dim = 1);

  std::uint64_t operator[](int degree) const;
  /// Highest degree with nonzero homology; -2 when acyclic.
  int top_degree() const { return static_cast<int>(dims_.size()) - 2; }
  bool is_acyclic() const { return dims_.empty(); }
  bool is_void() const { return void_; }
  const std::vector<std::uint64_t>& dims() const { return dims_; }

  /// Sum over degrees j of (-1)^j dim H_j.
  long long euler_characteristic() const;

  /// result[j] = this[j - by]. Degrees pushed below -1 must be zero.
  HomologyProfile shifted(int by) const;

  std::string to_string() const;

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;

 private:
  void trim();

  std::vector<std::uint64_t> dims_;
  bool void_ = false;
};

/// Künneth formula for joins: H_i(A*B) = sum over a+b = i-1 of H_a(A) (x) H_b(B).
HomologyProfile join_profile(const HomologyProfile& a, const HomologyProfile& b);

/// Sum over faces of (-1)^dim, counting the empty face in dimension -1.
long long reduced_euler_characteristic(const SimplicialComplex& delta);

/// Augmented boundary map C_d -> C_{d-1}: rows are (d-1)-faces, columns
/// d-faces, both in the complex's stable order. Entry for removing the i-th
/// smallest vertex is (-1)^i mod p; d = 0 gives the all-ones augmentation row.
Matrix boundary_matrix(const SimplicialComplex& delta, int d, const FieldSpec& field);

/// Rank of boundary_matrix(delta, d, field), assembled in the cheapest
/// representation for the field.
std::size_t boundary_rank(const SimplicialComplex& delta, int d, const FieldSpec& field);

/// dim H_j = f_j - rank d_j - rank d_{j+1} over the augmented chain complex.
/// The void complex gives void_profile().
HomologyProfile reduced_homology(const SimplicialComplex& delta, const FieldSpec& field);

/// Reduced homology of the independence complex of the subgraph induced on
/// `mask`, computed after homology-preserving reductions: an isolated vertex
/// makes the complex acyclic; a vertex v with N(u) contained in N(v) for
/// some other u is dropped; components are combined by the join formula.
/// Whatever remains irreducible goes through boundary ranks.
HomologyProfile induced_homology(std::span<const VertexSet> adj, VertexSet mask, const FieldSpec& field);

/// induced_homology over the whole graph.
HomologyProfile graph_homology(const Graph& g, const FieldSpec& field);

/// Reduced homology of Delta(G[mask]) straight from boundary ranks, no reductions.
HomologyProfile induced_homology_direct(std::span<const VertexSet> adj, VertexSet mask,
                                        const FieldSpec& field);

/// Consistency checks of the link/deletion long exact sequence at a vertex.
struct MayerVietorisReport {
  HomologyProfile complex;
  HomologyProfile link;
  HomologyProfile deletion;
  /// dim B <= dim A + dim C at every position A -> B -> C of the sequence.
  bool exactness_bounds_hold = false;
  /// Alternating sum of dimensions along the sequence vanishes.
  bool alternating_sum_vanishes = false;
  /// Link acyclic from degree r on => H_j(complex) = H_j(deletion) for j >= r+1, every r >= 0.
  bool acyclic_link_rule_holds = false;
  /// Deletion acyclic from degree r on => H_j(complex) = H_{j-1}(link) for j >= r+1, every r >= 0.
  bool acyclic_deletion_rule_holds = false;

  bool all_hold() const {
    return exactness_bounds_hold && alternating_sum_vanishes && acyclic_link_rule_holds &&
           acyclic_deletion_rule_holds;
  }
};

/// Throws std::invalid_argument when v is not a vertex of delta or its link is {empty face}.
MayerVietorisReport mayer_vietoris_check(const SimplicialComplex& delta, int v, const FieldSpec& field);

}  // namespace betti
