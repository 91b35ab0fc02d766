#include "betti_lab/reference.hpp"

#include "betti_lab/complex.hpp"
#include "betti_lab/hochster.hpp"
#include "betti_lab/homology.hpp"

namespace betti::reference {

BettiDiagram hochster_betti(const Graph& g, const FieldSpec& field, int max_vertices) {
  const int n = g.num_vertices();
  if (n > max_vertices) throw ComputeCapError(n, max_vertices);
  BettiDiagram d(n, field);
  for (VertexSet w = 1; w < (VertexSet{1} << n); ++w) {
    const Graph sub = induced_subgraph(g, w);
    const HomologyProfile h = reduced_homology(independence_complex(sub), field);
    const int size = sub.num_vertices();
    for (int degree = -1; degree <= h.top_degree(); ++degree) {
      const int i = size - degree - 2;
      if (i >= 0) d.add(i, size, h[degree]);
    }
  }
  return d;
}

}  // namespace betti::reference
