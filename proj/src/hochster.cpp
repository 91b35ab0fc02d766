#include "betti_lab/hochster.hpp"

#include <omp.h>

#include <string>

#include "betti_lab/homology.hpp"

namespace betti {

ComputeCapError::ComputeCapError(int vertices, int cap)
    : std::runtime_error("graph has " + std::to_string(vertices) + " vertices, above the cap of " +
                         std::to_string(cap) + "; a full run visits 2^" + std::to_string(vertices) +
                         " = " + std::to_string(std::uint64_t{1} << std::min(vertices, 63)) +
                         " induced subgraphs"),
      vertices_(vertices),
      cap_(cap) {}

std::uint64_t ComputeCapError::estimated_subsets() const {
  return std::uint64_t{1} << std::min(vertices_, 63);
}

namespace {

int team_size(const HochsterOptions& options) {
  return options.threads > 0 ? options.threads : omp_get_max_threads();
}

/// Dense (i, j) accumulator with 0 <= i, j <= n.
class Accumulator {
 public:
  explicit Accumulator(int n) : n_(n), cells_(static_cast<std::size_t>((n + 1) * (n + 1)), 0) {}

  void add(int i, int j, std::uint64_t v) { cells_[static_cast<std::size_t>(i * (n_ + 1) + j)] += v; }

  void merge_into(Accumulator& other) const {
    for (std::size_t c = 0; c < cells_.size(); ++c) other.cells_[c] += cells_[c];
  }

  BettiDiagram to_diagram(const FieldSpec& field) const {
    BettiDiagram d(n_, field);
    for (int i = 0; i <= n_; ++i)
      for (int j = 0; j <= n_; ++j) d.add(i, j, cells_[static_cast<std::size_t>(i * (n_ + 1) + j)]);
    return d;
  }

 private:
  int n_;
  std::vector<std::uint64_t> cells_;
};

std::uint64_t choose(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return c;
}

}  // namespace

BettiDiagram hochster_betti(const Graph& g, const FieldSpec& field, const HochsterOptions& options) {
  const int n = g.num_vertices();
  if (n > options.max_vertices) throw ComputeCapError(n, options.max_vertices);
  const auto adj = g.adjacency();
  const long long subsets = 1LL << n;
  Accumulator total(n);

#pragma omp parallel num_threads(team_size(options))
  {
    Accumulator local(n);
#pragma omp for schedule(dynamic, 512)
    for (long long s = 1; s < subsets; ++s) {
      const auto mask = static_cast<VertexSet>(s);
      const int size = set_size(mask);
      const HomologyProfile h = induced_homology(adj, mask, field);
      const auto& dims = h.dims();
      for (std::size_t idx = 0; idx < dims.size(); ++idx) {
        if (dims[idx] == 0) continue;
        // degree idx-1 = j-2, so the row is j = idx+1 and i = |W| - j.
        const int i = size - static_cast<int>(idx) - 1;
        if (i >= 0) local.add(i, size, dims[idx]);
      }
    }
#pragma omp critical(betti_merge)
    local.merge_into(total);
  }
  return total.to_diagram(field);
}

BettiDiagram hochster_betti_complex(const SimplicialComplex& delta, const FieldSpec& field, int max_universe) {
  const int n = delta.universe();
  if (n > max_universe) throw ComputeCapError(n, max_universe);
  BettiDiagram d(n, field);
  if (delta.is_void()) {
    d.set(0, 0, 1);
    return d;
  }
  for (VertexSet w = 1; w < (VertexSet{1} << n); ++w) {
    const HomologyProfile h = reduced_homology(induced_subcomplex(delta, w), field);
    const int size = set_size(w);
    for (int degree = -1; degree <= h.top_degree(); ++degree) {
      const int i = size - degree - 2;
      if (i >= 0 && h[degree] != 0) d.add(i, size, h[degree]);
    }
  }
  return d;
}

std::vector<std::uint64_t> linear_strand_rvt(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 2) return {};
  std::vector<VertexSet> co(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) co[v] = full_set(n) & ~g.adjacency()[v] & ~bit(v);
  std::vector<std::uint64_t> strand(static_cast<std::size_t>(n - 1), 0);
  for (VertexSet w = 1; w < (VertexSet{1} << n); ++w) {
    const int size = set_size(w);
    if (size < 2) continue;
    strand[static_cast<std::size_t>(size - 2)] += static_cast<std::uint64_t>(component_count(co, w) - 1);
  }
  return strand;
}

std::vector<std::uint64_t> main_diagonal_katzman(const Graph& g) {
  std::vector<std::uint64_t> out;
  for (int i = 0; 2 * (i + 1) <= g.num_vertices(); ++i) out.push_back(count_induced_matchings(g, i + 1));
  return out;
}

std::optional<BettiDiagram> dual_betti_via_links(const Graph& g, const FieldSpec& field,
                                                 const HochsterOptions& options) {
  if (g.num_edges() == 0) return std::nullopt;
  const int n = g.num_vertices();
  if (n > options.max_vertices) throw ComputeCapError(n, options.max_vertices);
  const auto adj = g.adjacency();
  const std::vector<Face> faces = independence_complex(g).all_faces();
  const VertexSet all = g.vertex_set();
  Accumulator total(n);

#pragma omp parallel num_threads(team_size(options))
  {
    Accumulator local(n);
#pragma omp for schedule(dynamic, 64)
    for (std::size_t f = 0; f < faces.size(); ++f) {
      VertexSet closed = faces[f];
      for_each_vertex(faces[f], [&](int v) { closed |= adj[v]; });
      const HomologyProfile h = induced_homology(adj, all & ~closed, field);
      const int m = n - set_size(faces[f]);
      const auto& dims = h.dims();
      // dims[idx] is degree idx-1 = i-1.
      for (std::size_t idx = 0; idx < dims.size(); ++idx)
        if (dims[idx] != 0) local.add(static_cast<int>(idx), m, dims[idx]);
    }
#pragma omp critical(betti_merge)
    local.merge_into(total);
  }
  return total.to_diagram(field);
}

std::uint64_t dual_betti_upper_bound(const BettiDiagram& primal, int i, int m) {
  const int n = primal.ambient_vertices();
  std::uint64_t bound = 0;
  for (int a = 0; a <= n - m; ++a) bound += choose(m + a, a) * primal.at(m - i - 1, m + a);
  return bound;
}

}  // namespace betti
