#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "betti_lab/graph.hpp"

namespace betti {

/// A face is a vertex subset; vertices are indices into the complex's universe.
using Face = VertexSet;

/// Finite simplicial complex over the universe {0, ..., universe-1}.
///
/// All faces are stored explicitly, grouped by dimension and sorted inside
/// each group, so `faces(d)[i]` is a stable index for boundary assembly.
/// The void complex (no faces at all) and {empty face} are distinct values.
/// Every constructor produces a downward-closed family.
class SimplicialComplex {
 public:
  /// {empty face} on the given universe.
  explicit SimplicialComplex(int universe = 0);

  static SimplicialComplex void_complex(int universe);
  /// Downward closure of `generators`. An empty generator list gives {empty face}.
  static SimplicialComplex from_facets(int universe, std::span<const Face> generators);
  /// Full simplex on `vertices`.
  static SimplicialComplex simplex(int universe, VertexSet vertices);

  int universe() const { return universe_; }
  bool is_void() const { return !has_empty_face_; }
  bool includes_empty_face() const { return has_empty_face_; }

  /// -1 for {empty face}; -2 for the void complex.
  int dimension() const;
  bool contains(Face f) const;
  /// Faces of dimension d (d >= 0), sorted ascending. Empty beyond dimension().
  std::span<const Face> faces(int d) const;
  /// Position of `f` inside faces(|f|-1); nullopt when `f` is not a face.
  std::optional<std::size_t> index_of(Face f) const;

  /// f[0] counts the empty face, f[d+1] the d-dimensional faces.
  std::vector<std::size_t> f_vector() const;
  std::size_t num_faces() const;
  /// Union of all faces, i.e. the vertices v with {v} in the complex.
  VertexSet vertex_set() const;
  std::vector<Face> facets() const;
  /// Every face, empty face first when present, then by dimension.
  std::vector<Face> all_faces() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  friend SimplicialComplex from_closed_faces(int, bool, std::vector<Face>);

  int universe_ = 0;
  bool has_empty_face_ = true;
  std::vector<std::vector<Face>> by_dim_;
};

/// Builds a complex from a family the caller guarantees is downward closed
/// (excluding the empty face, flagged separately). Sorts and deduplicates.
SimplicialComplex from_closed_faces(int universe, bool has_empty_face, std::vector<Face> faces);

/// Faces are the independent sets of g. The graph with no vertices gives {empty face}.
SimplicialComplex independence_complex(const Graph& g);

/// Throws std::invalid_argument when sigma is not a face.
SimplicialComplex link(const SimplicialComplex& delta, Face sigma);
/// Faces disjoint from sigma. Throws std::invalid_argument when sigma is not a face.
SimplicialComplex deletion(const SimplicialComplex& delta, Face sigma);

/// Faces of delta contained in `w`.
SimplicialComplex induced_subcomplex(const SimplicialComplex& delta, VertexSet w);

/// Requires disjoint vertex sets; the result's universe is the larger one.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Relabels vertex v to v + offset, growing the universe by offset.
SimplicialComplex shifted(const SimplicialComplex& delta, int offset);

/// {complement of F : F not a face}, complements taken in the universe.
SimplicialComplex alexander_dual(const SimplicialComplex& delta);

/// Minimal non-faces inside the universe, sorted.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& delta);

}  // namespace betti
