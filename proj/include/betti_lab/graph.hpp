#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace betti {

/// Vertex subsets are machine words; bit v set means vertex v is present.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet full_set(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : bit(n) - 1;
}

constexpr int set_size(VertexSet s) { return std::popcount(s); }

constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

template <class Fn>
constexpr void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    fn(std::countr_zero(s));
    s &= s - 1;
  }
}

std::vector<int> to_vector(VertexSet s);
VertexSet to_set(std::span<const int> vertices);

/// Simple undirected graph on at most 64 vertices.
///
/// Immutable once built. Vertices are 0..n-1; `label(v)` is the vertex's
/// name in the graph it was cut out of (identity for freshly built graphs),
/// so interval logic on induced subgraphs can refer to ambient circulant
/// positions.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `n` vertices.
  explicit Graph(int n);

  /// Throws std::invalid_argument on loops or out-of-range endpoints.
  /// Duplicate edges are merged.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  /// Adjacency rows are validated for symmetry and irreflexivity.
  static Graph from_adjacency(std::vector<VertexSet> rows, std::vector<int> labels = {});

  int num_vertices() const { return n_; }
  std::size_t num_edges() const;
  VertexSet vertex_set() const { return full_set(n_); }

  bool adjacent(int u, int v) const;
  VertexSet neighbors(int v) const;
  VertexSet closed_neighborhood(int v) const { return neighbors(v) | bit(v); }
  int degree(int v) const { return set_size(neighbors(v)); }

  int label(int v) const;
  const std::vector<int>& labels() const { return labels_; }
  bool has_identity_labels() const;

  /// Edges (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;
  std::span<const VertexSet> adjacency() const { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<int> labels_;
};

/// Parameters of a Generalized Andrasfai graph, optionally with the exterior
/// cycle {i, i+1} deleted. n = t(k-1) + 2.
struct GAParams {
  int t = 1;
  int k = 2;
  bool deleted_cycle = false;

  /// Throws std::invalid_argument unless t >= 1 and k >= 2 and n <= 64.
  static GAParams make(int t, int k, bool deleted_cycle);

  int n() const { return t * (k - 1) + 2; }
  friend bool operator==(const GAParams&, const GAParams&) = default;
};

struct Interval {
  int start = 0;  ///< first vertex after the removed vertex opening the gap
  int length = 0;
};

/// Cyclic gaps between the removed vertices of an induced subgraph W < GA(t,k)'.
/// `intervals[i]` follows `removed[i]` in cyclic order.
struct IntervalDecomposition {
  GAParams ambient;
  std::vector<int> removed;
  std::vector<Interval> intervals;

  std::vector<int> lengths() const;
  std::vector<int> vertices_of(std::size_t interval) const;
  /// True when every interval strictly between a and b, going one way or the
  /// other around the cycle, has length 0.
  bool consecutive(std::size_t a, std::size_t b) const;
  std::vector<std::pair<std::size_t, std::size_t>> consecutive_pairs() const;
};

// Construction ---------------------------------------------------------------

/// Cay(Z_n, S). Each s and n-s give the same edge set. Rejects s = 0 mod n.
Graph circulant(int n, std::span<const int> connection_set);
Graph generalized_andrasfai(int t, int k);
/// GA(t,k) minus the exterior Hamiltonian cycle.
Graph ga_prime(int t, int k);
Graph build(const GAParams& params);

/// Deletes the edges {c0,c1}, ..., {c_{m-1},c0}. `cycle` lists distinct
/// vertices; the closing edge back to the first vertex is implied.
Graph remove_cycle_edges(const Graph& g, std::span<const int> cycle);

/// The Hamiltonian cycle (step*i mod n : 0 <= i < n) used for cycle-deletion
/// experiments. Requires gcd(step, n) = 1.
std::vector<int> multiplicative_cycle(int n, int step);

Graph complement(const Graph& g);
/// Vertices of the result are the members of `s` in increasing order; labels
/// are inherited from `g`.
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph delete_vertices(const Graph& g, VertexSet s);
/// Vertices of `b` are appended after those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

// Queries --------------------------------------------------------------------

int connected_component_count(const Graph& g);
/// Component count of the subgraph induced on `mask` by adjacency rows.
int component_count(std::span<const VertexSet> adj, VertexSet mask);
std::vector<VertexSet> components(std::span<const VertexSet> adj, VertexSet mask);

bool is_triangle_free(const Graph& g);
int min_degree(const Graph& g);
bool is_regular(const Graph& g, int degree);

/// Whether the induced subgraph on `s` is complete bipartite with parts of
/// sizes {a, b}.
bool induces_complete_bipartite(const Graph& g, VertexSet s, int a, int b);
/// Number of induced subgraphs isomorphic to K_{a,b}, 0 < a <= b.
std::uint64_t count_induced_complete_bipartite(const Graph& g, int a, int b);

/// Vertex sets of all induced matchings with m edges, sorted ascending.
std::vector<VertexSet> enumerate_induced_matchings(const Graph& g, int m);
std::uint64_t count_induced_matchings(const Graph& g, int m);
int induced_matching_number(const Graph& g);

/// Exact vertex connectivity via vertex-disjoint path counting.
/// Disconnected graphs give 0; K_n gives n-1.
int vertex_connectivity(const Graph& g);

IntervalDecomposition intervals(const GAParams& params, std::span<const int> removed);
/// Intervals of an induced subgraph of build(params), read from its labels.
IntervalDecomposition intervals(const GAParams& params, const Graph& w);

}  // namespace betti
