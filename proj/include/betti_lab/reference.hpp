#pragma once

#include "betti_lab/diagram.hpp"
#include "betti_lab/graph.hpp"
#include "betti_lab/linalg.hpp"

namespace betti::reference {

/// Serial Hochster evaluation with no homology shortcuts: every induced
/// subgraph is materialized, its independence complex built and its ranks
/// taken. Slow; kept as the baseline the parallel kernel is tested and
/// benchmarked against.
BettiDiagram hochster_betti(const Graph& g, const FieldSpec& field, int max_vertices = 14);

}  // namespace betti::reference
