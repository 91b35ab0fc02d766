#pragma once

#include "betti_lab/graph.hpp"

namespace betti {

/// Deletes a vertex v whenever some u != v, u not adjacent to v, has
/// N(u) inside N(v); repeats until no such pair exists. The independence
/// complex keeps its reduced homology. Labels are inherited.
Graph reduce_dominated_vertex(const Graph& g);

struct PendantReduction {
  Graph graph;
  int shift = 0;
};

/// While some u has exactly one neighbour v, replaces g by g \ N[v].
/// H_j(Delta(g)) = H_{j - shift}(Delta(result)).
PendantReduction reduce_pendant(const Graph& g);

/// `w` is an induced subgraph of build(params) carrying ambient labels.
/// Cuts every interval longer than t down to its first t vertices.
/// Homology of the independence complex is unchanged. Returns `w` when no
/// vertex of the ambient graph is missing.
Graph trim_long_intervals(const GAParams& params, const Graph& w);

/// Removes every interval shorter than t that is consecutive to an interval
/// of length at least t, repeating until none is left. Homology unchanged.
Graph drop_short_intervals(const GAParams& params, const Graph& w);

}  // namespace betti
