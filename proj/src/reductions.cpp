#include "betti_lab/reductions.hpp"

#include <map>

namespace betti {

Graph reduce_dominated_vertex(const Graph& g) {
  Graph current = g;
  for (;;) {
    const auto adj = current.adjacency();
    const int n = current.num_vertices();
    int victim = -1;
    for (int u = 0; u < n && victim < 0; ++u)
      for (int v = 0; v < n; ++v) {
        if (v == u || (adj[u] & bit(v)) != 0) continue;
        if ((adj[u] & ~adj[v]) == 0) {
          victim = v;
          break;
        }
      }
    if (victim < 0) return current;
    current = delete_vertices(current, bit(victim));
  }
}

PendantReduction reduce_pendant(const Graph& g) {
  PendantReduction out{g, 0};
  for (;;) {
    int hub = -1;
    for (int u = 0; u < out.graph.num_vertices(); ++u)
      if (out.graph.degree(u) == 1) {
        hub = lowest(out.graph.neighbors(u));
        break;
      }
    if (hub < 0) return out;
    out.graph = delete_vertices(out.graph, out.graph.closed_neighborhood(hub));
    ++out.shift;
  }
}

namespace {

/// Positions in `w` of the given ambient labels.
VertexSet positions_of(const Graph& w, const std::vector<int>& labels) {
  std::map<int, int> where;
  for (int v = 0; v < w.num_vertices(); ++v) where[w.label(v)] = v;
  VertexSet s = 0;
  for (int label : labels) {
    const auto it = where.find(label);
    if (it != where.end()) s |= bit(it->second);
  }
  return s;
}

bool misses_ambient_vertex(const GAParams& params, const Graph& w) {
  return w.num_vertices() < params.n();
}

}  // namespace

Graph trim_long_intervals(const GAParams& params, const Graph& w) {
  if (!misses_ambient_vertex(params, w) || w.num_vertices() == 0) return w;
  const IntervalDecomposition dec = intervals(params, w);
  std::vector<int> cut;
  for (std::size_t i = 0; i < dec.intervals.size(); ++i) {
    const std::vector<int> members = dec.vertices_of(i);
    for (std::size_t p = static_cast<std::size_t>(params.t); p < members.size(); ++p) cut.push_back(members[p]);
  }
  return delete_vertices(w, positions_of(w, cut));
}

Graph drop_short_intervals(const GAParams& params, const Graph& w) {
  Graph current = w;
  for (;;) {
    if (!misses_ambient_vertex(params, current) || current.num_vertices() == 0) return current;
    const IntervalDecomposition dec = intervals(params, current);
    std::vector<int> cut;
    for (const auto& [a, b] : dec.consecutive_pairs()) {
      const int la = dec.intervals[a].length;
      const int lb = dec.intervals[b].length;
      if (la >= params.t && lb > 0 && lb < params.t) cut = dec.vertices_of(b);
      else if (lb >= params.t && la > 0 && la < params.t) cut = dec.vertices_of(a);
      if (!cut.empty()) break;
    }
    if (cut.empty()) return current;
    current = delete_vertices(current, positions_of(current, cut));
  }
}

}  // namespace betti
