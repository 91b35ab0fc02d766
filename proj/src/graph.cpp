#include "betti_lab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace betti {

std::vector<int> to_vector(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

VertexSet to_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("vertex index out of range");
    s |= bit(v);
  }
  return s;
}

// Graph ----------------------------------------------------------------------

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph size must be in [0, 64], got " + std::to_string(n));
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n), 0);
  labels_.resize(static_cast<std::size_t>(n));
  std::iota(labels_.begin(), labels_.end(), 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows, std::vector<int> labels) {
  const int n = static_cast<int>(rows.size());
  Graph g(n);
  if (!labels.empty()) {
    if (labels.size() != rows.size()) throw std::invalid_argument("label count differs from vertex count");
    g.labels_ = std::move(labels);
  }
  const VertexSet all = full_set(n);
  for (int v = 0; v < n; ++v) {
    if ((rows[v] & ~all) != 0) throw std::invalid_argument("neighbor index out of range");
    if ((rows[v] & bit(v)) != 0) throw std::invalid_argument("adjacency is not irreflexive");
  }
  for (int u = 0; u < n; ++u)
    for_each_vertex(rows[u], [&](int v) {
      if ((rows[v] & bit(u)) == 0) throw std::invalid_argument("adjacency is not symmetric");
    });
  g.adj_ = std::move(rows);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of size " +
                            std::to_string(n_));
}

std::size_t Graph::num_edges() const {
  std::size_t twice = 0;
  for (VertexSet row : adj_) twice += static_cast<std::size_t>(set_size(row));
  return twice / 2;
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] & bit(v)) != 0;
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::label(int v) const {
  check_vertex(v);
  return labels_[v];
}

bool Graph::has_identity_labels() const {
  for (int v = 0; v < n_; ++v)
    if (labels_[v] != v) return false;
  return true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for_each_vertex(adj_[u] & ~full_set(u + 1), [&](int v) { out.emplace_back(u, v); });
  return out;
}

// GAParams / intervals -------------------------------------------------------

GAParams GAParams::make(int t, int k, bool deleted_cycle) {
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  GAParams p{t, k, deleted_cycle};
  if (p.n() > kMaxVertices) throw std::invalid_argument("t(k-1)+2 exceeds 64 vertices");
  return p;
}

std::vector<int> IntervalDecomposition::lengths() const {
  std::vector<int> out;
  out.reserve(intervals.size());
  for (const auto& iv : intervals) out.push_back(iv.length);
  return out;
}

std::vector<int> IntervalDecomposition::vertices_of(std::size_t interval) const {
  const Interval& iv = intervals.at(interval);
  const int n = ambient.n();
  std::vector<int> out;
  for (int i = 0; i < iv.length; ++i) out.push_back((iv.start + i) % n);
  return out;
}

bool IntervalDecomposition::consecutive(std::size_t a, std::size_t b) const {
  const std::size_t m = intervals.size();
  if (a >= m || b >= m) throw std::out_of_range("interval index out of range");
  if (a == b) return false;
  auto zero_between = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = (from + 1) % m; i != to; i = (i + 1) % m)
      if (intervals[i].length != 0) return false;
    return true;
  };
  return zero_between(a, b) || zero_between(b, a);
}

std::vector<std::pair<std::size_t, std::size_t>> IntervalDecomposition::consecutive_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < intervals.size(); ++a)
    for (std::size_t b = a + 1; b < intervals.size(); ++b)
      if (consecutive(a, b)) out.emplace_back(a, b);
  return out;
}

IntervalDecomposition intervals(const GAParams& params, std::span<const int> removed) {
  const int n = params.n();
  std::vector<int> sorted(removed.begin(), removed.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw std::invalid_argument("intervals need at least one removed vertex");
  if (sorted.front() < 0 || sorted.back() >= n)
    throw std::out_of_range("removed vertex outside the ambient circulant");
  if (static_cast<int>(sorted.size()) == n)
    throw std::invalid_argument("removing every vertex leaves no induced subgraph");

  IntervalDecomposition dec{params, sorted, {}};
  const std::size_t m = sorted.size();
  for (std::size_t i = 0; i < m; ++i) {
    const int here = sorted[i];
    const int next = sorted[(i + 1) % m];
    dec.intervals.push_back({(here + 1) % n, ((next - here - 1) % n + n) % n});
  }
  if (m == 1) dec.intervals.front().length = n - 1;
  return dec;
}

IntervalDecomposition intervals(const GAParams& params, const Graph& w) {
  VertexSet kept = 0;
  for (int label : w.labels()) {
    if (label < 0 || label >= params.n()) throw std::out_of_range("label outside the ambient circulant");
    kept |= bit(label);
  }
  const std::vector<int> removed = to_vector(full_set(params.n()) & ~kept);
  return intervals(params, removed);
}

// Construction ---------------------------------------------------------------

Graph circulant(int n, std::span<const int> connection_set) {
  if (n < 1) throw std::invalid_argument("circulant needs n >= 1");
  Graph base(n);
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  for (int s : connection_set) {
    const int r = ((s % n) + n) % n;
    if (r == 0) throw std::invalid_argument("connection set contains 0 (would create loops)");
    for (int a = 0; a < n; ++a) {
      const int b = (a + r) % n;
      rows[a] |= bit(b);
      rows[b] |= bit(a);
    }
  }
  return Graph::from_adjacency(std::move(rows));
}

Graph generalized_andrasfai(int t, int k) {
  const GAParams p = GAParams::make(t, k, false);
  std::vector<int> s;
  for (int j = 0; j <= k - 1; ++j) s.push_back(1 + j * t);
  return circulant(p.n(), s);
}

Graph ga_prime(int t, int k) {
  const GAParams p = GAParams::make(t, k, true);
  std::vector<int> s;
  for (int j = 1; j <= k - 2; ++j) s.push_back(1 + j * t);
  if (s.empty()) return Graph(p.n());
  return circulant(p.n(), s);
}

Graph build(const GAParams& params) {
  return params.deleted_cycle ? ga_prime(params.t, params.k)
                              : generalized_andrasfai(params.t, params.k);
}

Graph remove_cycle_edges(const Graph& g, std::span<const int> cycle) {
  std::vector<int> walk(cycle.begin(), cycle.end());
  if (walk.size() > 1 && walk.front() == walk.back()) walk.pop_back();
  if (walk.size() < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  VertexSet seen = 0;
  for (int v : walk) {
    if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("cycle vertex out of range");
    if ((seen & bit(v)) != 0) throw std::invalid_argument("cycle repeats vertex " + std::to_string(v));
    seen |= bit(v);
  }
  std::vector<VertexSet> rows(g.adjacency().begin(), g.adjacency().end());
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const int u = walk[i];
    const int v = walk[(i + 1) % walk.size()];
    if ((rows[u] & bit(v)) == 0)
      throw std::invalid_argument("cycle step {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} is not an edge");
    rows[u] &= ~bit(v);
    rows[v] &= ~bit(u);
  }
  return Graph::from_adjacency(std::move(rows), g.labels());
}

std::vector<int> multiplicative_cycle(int n, int step) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  if (std::gcd(((step % n) + n) % n, n) != 1)
    throw std::invalid_argument("step must be a unit mod n to give a Hamiltonian cycle");
  std::vector<int> out;
  for (long long i = 0; i < n; ++i) out.push_back(static_cast<int>(((step * i) % n + n) % n));
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rows[v] = full_set(n) & ~g.adjacency()[v] & ~bit(v);
  return Graph::from_adjacency(std::move(rows), g.labels());
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if ((s & ~g.vertex_set()) != 0) throw std::out_of_range("induced subgraph vertex out of range");
  const std::vector<int> keep = to_vector(s);
  std::vector<int> position(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = static_cast<int>(i);
  std::vector<VertexSet> rows(keep.size(), 0);
  std::vector<int> labels;
  labels.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for_each_vertex(g.adjacency()[keep[i]] & s, [&](int w) { rows[i] |= bit(position[w]); });
    labels.push_back(g.label(keep[i]));
  }
  return Graph::from_adjacency(std::move(rows), std::move(labels));
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  for (int v : vertices)
    if (v < 0 || v >= g.num_vertices()) throw std::out_of_range("induced subgraph vertex out of range");
  return induced_subgraph(g, to_set(vertices));
}

Graph delete_vertices(const Graph& g, VertexSet s) {
  return induced_subgraph(g, g.vertex_set() & ~s);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.num_vertices();
  const int n = na + b.num_vertices();
  if (n > kMaxVertices) throw std::invalid_argument("disjoint union exceeds 64 vertices");
  std::vector<VertexSet> rows(a.adjacency().begin(), a.adjacency().end());
  std::vector<int> labels = a.labels();
  for (int v = 0; v < b.num_vertices(); ++v) {
    rows.push_back(b.adjacency()[v] << na);
    labels.push_back(b.label(v));
  }
  return Graph::from_adjacency(std::move(rows), std::move(labels));
}

// Queries --------------------------------------------------------------------

std::vector<VertexSet> components(std::span<const VertexSet> adj, VertexSet mask) {
  std::vector<VertexSet> out;
  VertexSet rest = mask;
  while (rest != 0) {
    VertexSet comp = bit(lowest(rest));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= adj[v]; });
      next &= mask & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

int component_count(std::span<const VertexSet> adj, VertexSet mask) {
  int count = 0;
  VertexSet rest = mask;
  while (rest != 0) {
    VertexSet comp = bit(lowest(rest));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= adj[v]; });
      next &= mask & ~comp;
      comp |= next;
      frontier = next;
    }
    ++count;
    rest &= ~comp;
  }
  return count;
}

int connected_component_count(const Graph& g) {
  return component_count(g.adjacency(), g.vertex_set());
}

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges())
    if ((g.adjacency()[u] & g.adjacency()[v]) != 0) return false;
  return true;
}

int min_degree(const Graph& g) {
  if (g.num_vertices() == 0) return 0;
  int best = g.num_vertices();
  for (int v = 0; v < g.num_vertices(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_regular(const Graph& g, int degree) {
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) != degree) return false;
  return true;
}

bool induces_complete_bipartite(const Graph& g, VertexSet s, int a, int b) {
  if (a <= 0 || b <= 0 || set_size(s) != a + b) return false;
  const auto adj = g.adjacency();
  const VertexSet side_b = adj[lowest(s)] & s;
  const VertexSet side_a = s & ~side_b;
  const int na = set_size(side_a);
  const int nb = set_size(side_b);
  if (!((na == a && nb == b) || (na == b && nb == a))) return false;
  bool ok = true;
  for_each_vertex(side_a, [&](int x) { ok = ok && (adj[x] & s) == side_b; });
  for_each_vertex(side_b, [&](int y) { ok = ok && (adj[y] & s) == side_a; });
  return ok;
}

namespace {

/// Calls fn(mask) for every r-subset of {0..n-1}, in increasing numeric order.
template <class Fn>
void for_each_subset_of_size(int n, int r, Fn&& fn) {
  if (r < 0 || r > n) return;
  if (r == 0) {
    fn(VertexSet{0});
    return;
  }
  VertexSet s = full_set(r);
  const VertexSet limit = full_set(n);
  while (true) {
    fn(s);
    if (s == (limit & ~full_set(n - r))) break;
    const VertexSet c = s & (~s + 1);
    const VertexSet r2 = s + c;
    s = (((r2 ^ s) >> 2) / c) | r2;
  }
}

}  // namespace

std::uint64_t count_induced_complete_bipartite(const Graph& g, int a, int b) {
  if (a <= 0 || b < a) throw std::invalid_argument("need 0 < a <= b");
  std::uint64_t count = 0;
  for_each_subset_of_size(g.num_vertices(), a + b, [&](VertexSet s) {
    if (induces_complete_bipartite(g, s, a, b)) ++count;
  });
  return count;
}

namespace {

void extend_matchings(const std::vector<std::pair<int, int>>& edges, std::span<const VertexSet> adj,
                      std::size_t from, int remaining, VertexSet chosen, VertexSet blocked,
                      std::vector<VertexSet>& out) {
  if (remaining == 0) {
    out.push_back(chosen);
    return;
  }
  for (std::size_t e = from; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    if ((blocked & (bit(u) | bit(v))) != 0) continue;
    const VertexSet closed = adj[u] | adj[v] | bit(u) | bit(v);
    extend_matchings(edges, adj, e + 1, remaining - 1, chosen | bit(u) | bit(v), blocked | closed, out);
  }
}

}  // namespace

std::vector<VertexSet> enumerate_induced_matchings(const Graph& g, int m) {
  if (m < 1) throw std::invalid_argument("matching size must be at least 1");
  std::vector<VertexSet> out;
  extend_matchings(g.edges(), g.adjacency(), 0, m, 0, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_induced_matchings(const Graph& g, int m) {
  return enumerate_induced_matchings(g, m).size();
}

int induced_matching_number(const Graph& g) {
  int m = 0;
  while (2 * (m + 1) <= g.num_vertices() && !enumerate_induced_matchings(g, m + 1).empty()) ++m;
  return m;
}

namespace {

/// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent),
/// by unit-capacity augmenting paths on the vertex-split network.
int local_connectivity(std::span<const VertexSet> adj, int n, int s, int t) {
  // Node 2v is v's entry, 2v+1 its exit.
  const int nodes = 2 * n;
  std::vector<int> cap(static_cast<std::size_t>(nodes * nodes), 0);
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a * nodes + b)]; };
  for (int v = 0; v < n; ++v) {
    at(2 * v, 2 * v + 1) = (v == s || v == t) ? n : 1;
    for_each_vertex(adj[v], [&](int w) { at(2 * v + 1, 2 * w) = n; });
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  std::vector<int> queue;
  while (true) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    queue.assign(1, source);
    for (std::size_t head = 0; head < queue.size() && parent[sink] < 0; ++head) {
      const int a = queue[head];
      for (int b = 0; b < nodes; ++b)
        if (parent[b] < 0 && at(a, b) > 0) {
          parent[b] = a;
          queue.push_back(b);
        }
    }
    if (parent[sink] < 0) return flow;
    for (int b = sink; b != source; b = parent[b]) {
      --at(parent[b], b);
      ++at(b, parent[b]);
    }
    ++flow;
  }
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 2) return 0;
  if (connected_component_count(g) != 1) return 0;
  const auto adj = g.adjacency();
  int best = n - 1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if ((adj[s] & bit(t)) == 0) best = std::min(best, local_connectivity(adj, n, s, t));
  return best;
}

}  // namespace betti
