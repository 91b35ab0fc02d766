#include <doctest.h>

#include "betti_lab/complex.hpp"
#include "betti_lab/homology.hpp"
#include "betti_lab/reductions.hpp"
#include "support.hpp"

using namespace betti;

namespace {

const FieldSpec gf2{2};
const FieldSpec gf32003{32003};

std::vector<std::uint64_t> dims_of(const Graph& g) {
  return reduced_homology(independence_complex(g), gf2).dims();
}

SimplicialComplex random_complex(int universe, std::mt19937_64& gen) {
  std::vector<Face> facets;
  const int count = 1 + static_cast<int>(gen() % 4);
  for (int i = 0; i < count; ++i) facets.push_back(support::random_subset(universe, gen));
  return SimplicialComplex::from_facets(universe, facets);
}

Graph random_induced(const Graph& g, std::mt19937_64& gen) {
  return induced_subgraph(g, support::random_subset(g.num_vertices(), gen));
}

}  // namespace

TEST_SUITE("boundary matrices") {
  TEST_CASE("full triangle") {
    const auto triangle = SimplicialComplex::simplex(3, full_set(3));
    const Matrix d1 = boundary_matrix(triangle, 1, gf2);
    CHECK(d1.rows == 3);
    CHECK(d1.cols == 3);
    for (std::size_t c = 0; c < 3; ++c) {
      std::uint32_t ones = 0;
      for (std::size_t r = 0; r < 3; ++r) ones += d1.at(r, c);
      CHECK(ones == 2);
    }
    CHECK(rank(d1, gf2) == 2);
    CHECK(boundary_rank(triangle, 1, gf2) == 2);
    CHECK(boundary_rank(triangle, 2, gf2) == 1);
  }

  TEST_CASE("signs over an odd prime") {
    const auto edge = SimplicialComplex::simplex(2, bit(0) | bit(1));
    const FieldSpec gf3{3};
    const Matrix d1 = boundary_matrix(edge, 1, gf3);
    // d{0,1} = {1} - {0}
    CHECK(d1.at(0, 0) == 2);
    CHECK(d1.at(1, 0) == 1);
  }

  TEST_CASE("augmentation row") {
    const auto delta = independence_complex(ga_prime(2, 4));
    const Matrix d0 = boundary_matrix(delta, 0, gf32003);
    CHECK(d0.rows == 1);
    CHECK(d0.cols == 8);
    for (std::size_t c = 0; c < d0.cols; ++c) CHECK(d0.at(0, c) == 1);
  }

  TEST_CASE("two disjoint edges give a circle") {
    const auto delta = independence_complex(support::to_graph(oracle::disjoint_edges(2)));
    CHECK(reduced_homology(delta, gf2) == HomologyProfile::concentrated(1));
  }
}

TEST_SUITE("reduced homology") {
  TEST_CASE("stars") {
    for (int r = 1; r <= 6; ++r) {
      const Graph star = support::to_graph(oracle::complete_bipartite(1, r));
      CHECK(graph_homology(star, gf2) == HomologyProfile::concentrated(0));
      CHECK(dims_of(star) == std::vector<std::uint64_t>{0, 1});
    }
  }

  TEST_CASE("disjoint edges") {
    for (int m = 1; m <= 5; ++m) {
      const Graph g = support::to_graph(oracle::disjoint_edges(m));
      CHECK(reduced_homology(independence_complex(g), gf2) == HomologyProfile::concentrated(m - 1));
      CHECK(graph_homology(g, gf32003) == HomologyProfile::concentrated(m - 1));
    }
  }

  TEST_CASE("GA(t,k)' has homology only in degree t") {
    const std::pair<int, int> instances[] = {{1, 4}, {2, 4}, {3, 4}, {2, 5}};
    for (const auto& [t, k] : instances) {
      CAPTURE(t);
      CAPTURE(k);
      const Graph g = ga_prime(t, k);
      CHECK(reduced_homology(independence_complex(g), gf2) == HomologyProfile::concentrated(t));
      CHECK(graph_homology(g, gf2) == HomologyProfile::concentrated(t));
      CHECK(support::oracle_profile(g) == HomologyProfile::concentrated(t).dims());
    }
  }

  TEST_CASE("deleting one vertex of GA(t,k)' leaves an acyclic complex") {
    for (const auto& [t, k] : {std::pair{2, 4}, std::pair{3, 4}, std::pair{2, 5}}) {
      const Graph g = ga_prime(t, k);
      for (int v = 0; v < g.num_vertices(); ++v)
        CHECK(graph_homology(delete_vertices(g, bit(v)), gf2).is_acyclic());
    }
  }

  TEST_CASE("empty face and void complex") {
    CHECK(reduced_homology(SimplicialComplex(3), gf2) == HomologyProfile::concentrated(-1));
    const auto v = reduced_homology(SimplicialComplex::void_complex(3), gf2);
    CHECK(v.is_void());
    CHECK(v.is_acyclic());
  }

  TEST_CASE("Euler identity") {
    auto& gen = support::rng();
    for (int round = 0; round < 200; ++round) {
      const auto delta = random_complex(1 + static_cast<int>(gen() % 7), gen);
      CHECK(reduced_homology(delta, gf2).euler_characteristic() == reduced_euler_characteristic(delta));
      CHECK(reduced_homology(delta, gf32003).euler_characteristic() == reduced_euler_characteristic(delta));
    }
  }

  TEST_CASE("engine profiles agree with the oracle on random graphs") {
    auto& gen = support::rng();
    for (int round = 0; round < 150; ++round) {
      const int n = 1 + static_cast<int>(gen() % 10);
      oracle::Matrix m = oracle::empty_graph(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (gen() % 2 == 0) oracle::connect(m, i, j);
      const Graph g = support::to_graph(m);
      CHECK(graph_homology(g, gf2).dims() == oracle::graph_homology(m, 2));
      CHECK(graph_homology(g, FieldSpec{3}).dims() == oracle::graph_homology(m, 3));
      CHECK(induced_homology_direct(g.adjacency(), g.vertex_set(), gf2) == graph_homology(g, gf2));
    }
  }

  TEST_CASE("cycles") {
    for (int n = 3; n <= 11; ++n) {
      CAPTURE(n);
      const Graph c = support::to_graph(oracle::cycle(n));
      CHECK(graph_homology(c, gf2).dims() == support::oracle_profile(c));
    }
  }
}

TEST_SUITE("certified reductions") {
  TEST_CASE("dominated vertex and pendant on random GA subgraphs") {
    auto& gen = support::rng();
    const std::pair<int, int> instances[] = {{2, 4}, {3, 4}, {2, 5}, {3, 5}};
    for (int round = 0; round < 500; ++round) {
      const auto [t, k] = instances[round % 4];
      const Graph w = random_induced(ga_prime(t, k), gen);
      const auto expected = support::oracle_profile(w);

      const Graph dominated = reduce_dominated_vertex(w);
      CHECK(dominated.num_vertices() <= w.num_vertices());
      CHECK(dims_of(dominated) == expected);

      const auto pendant = reduce_pendant(w);
      CHECK(reduced_homology(independence_complex(pendant.graph), gf2).shifted(pendant.shift).dims() == expected);
    }
  }

  TEST_CASE("twin vertices") {
    const Graph path = support::to_graph(oracle::complete_bipartite(1, 2));
    const Graph reduced = reduce_dominated_vertex(path);
    CHECK(reduced.num_vertices() == 2);
    CHECK(reduced.num_edges() == 1);
  }

  TEST_CASE("single edge and path on three vertices") {
    const auto edge = reduce_pendant(support::to_graph(oracle::complete(2)));
    CHECK(edge.graph.num_vertices() == 0);
    CHECK(edge.shift == 1);

    const Graph p3 = support::to_graph(oracle::complete_bipartite(1, 2));
    const auto path = reduce_pendant(p3);
    CHECK(path.graph.num_vertices() == 0);
    CHECK(path.shift == 1);
    CHECK(support::oracle_profile(p3) == std::vector<std::uint64_t>{0, 1});
  }

  TEST_CASE("pendant chain on GA(t,k)' minus N[0]") {
    for (int t = 2; t <= 4; ++t) {
      const Graph g = ga_prime(t, 4);
      const Graph rest = delete_vertices(g, g.closed_neighborhood(0));
      const auto r = reduce_pendant(rest);
      CHECK(reduced_homology(independence_complex(r.graph), gf2).shifted(r.shift) ==
            graph_homology(rest, gf2));
    }
  }

  TEST_CASE("no reduction applies to a triangle") {
    const Graph k3 = support::to_graph(oracle::complete(3));
    CHECK(reduce_dominated_vertex(k3) == k3);
    CHECK(reduce_pendant(k3).shift == 0);
  }
}

TEST_SUITE("joins") {
  TEST_CASE("Kunneth on random pairs") {
    auto& gen = support::rng();
    for (int round = 0; round < 100; ++round) {
      const int ua = 1 + static_cast<int>(gen() % 5);
      const int ub = 1 + static_cast<int>(gen() % 5);
      const auto a = random_complex(ua, gen);
      const auto b = shifted(random_complex(ub, gen), ua);
      const auto expected = join_profile(reduced_homology(a, gf2), reduced_homology(b, gf2));
      CHECK(reduced_homology(join(a, b), gf2) == expected);
    }
  }

  TEST_CASE("profile arithmetic") {
    const auto s1 = HomologyProfile::concentrated(1);
    CHECK(join_profile(s1, s1) == HomologyProfile::concentrated(3));
    CHECK(join_profile(s1, HomologyProfile::concentrated(-1)) == s1);
    CHECK(join_profile(s1, HomologyProfile{}).is_acyclic());
    CHECK(HomologyProfile::concentrated(2, 3).shifted(-1) == HomologyProfile::concentrated(1, 3));
  }
}

TEST_SUITE("intervals") {
  TEST_CASE("profile from the number of long intervals") {
    for (const auto& [t, k] : {std::pair{2, 4}, std::pair{3, 4}, std::pair{2, 5}}) {
      const GAParams params = GAParams::make(t, k, true);
      const Graph g = build(params);
      const int n = params.n();
      for (VertexSet removed = 1; removed < (VertexSet{1} << n); ++removed) {
        if (set_size(removed) > 4) continue;
        const auto dec = intervals(params, to_vector(removed));
        int long_ones = 0;
        for (int len : dec.lengths()) long_ones += len >= t;
        if (long_ones == 0) continue;
        const auto expected = long_ones == 1 ? HomologyProfile{}
                                             : HomologyProfile::concentrated(t - 1, static_cast<std::uint64_t>(long_ones - 1));
        const Graph w = delete_vertices(g, removed);
        CHECK(graph_homology(w, gf2) == expected);
      }
    }
  }

  TEST_CASE("trimming and dropping keep homology") {
    auto& gen = support::rng();
    for (const auto& [t, k] : {std::pair{2, 4}, std::pair{3, 4}, std::pair{2, 5}, std::pair{3, 5}}) {
      const GAParams params = GAParams::make(t, k, true);
      const Graph g = build(params);
      for (int round = 0; round < 100; ++round) {
        const VertexSet removed = support::random_subset(params.n(), gen) | bit(static_cast<int>(gen() % params.n()));
        const Graph w = delete_vertices(g, removed);
        const auto expected = support::oracle_profile(w);

        const Graph trimmed = trim_long_intervals(params, w);
        CHECK(dims_of(trimmed) == expected);
        if (trimmed.num_vertices() < params.n())
          for (int len : intervals(params, trimmed).lengths()) CHECK(len <= t);

        const Graph dropped = drop_short_intervals(params, w);
        CHECK(dims_of(dropped) == expected);
        CHECK(dropped.num_vertices() <= w.num_vertices());
      }
    }
  }

  TEST_CASE("full graph is returned unchanged") {
    const GAParams params = GAParams::make(2, 4, true);
    const Graph g = build(params);
    CHECK(trim_long_intervals(params, g) == g);
    CHECK(drop_short_intervals(params, g) == g);
  }
}

TEST_SUITE("link decomposition") {
  TEST_CASE("link of {0,2} in GA(3,k)' splits as a join") {
    for (int k : {4, 5}) {
      CAPTURE(k);
      const auto whole = link(independence_complex(ga_prime(3, k)), bit(0) | bit(2));
      const auto left = link(independence_complex(ga_prime(2, k)), bit(0) | bit(2));
      const auto right = link(independence_complex(ga_prime(2, k)), bit(0) | bit(1));
      CHECK(reduced_homology(whole, gf2) ==
            join_profile(reduced_homology(left, gf2), reduced_homology(right, gf2)));
    }
  }
}

TEST_SUITE("long exact sequence") {
  TEST_CASE("GA(2,4)' at every vertex") {
    const auto delta = independence_complex(ga_prime(2, 4));
    for (int v = 0; v < 8; ++v) {
      const auto report = mayer_vietoris_check(delta, v, gf2);
      CHECK(report.all_hold());
      CHECK(report.deletion.is_acyclic());
      CHECK(report.complex == report.link.shifted(1));
    }
  }

  TEST_CASE("five-cycle at every vertex") {
    const auto delta = independence_complex(support::to_graph(oracle::cycle(5)));
    for (int v = 0; v < 5; ++v) {
      const auto report = mayer_vietoris_check(delta, v, gf32003);
      CHECK(report.all_hold());
      CHECK(report.complex == HomologyProfile::concentrated(1));
    }
  }

  TEST_CASE("acyclic link") {
    // Vertex 0 of a path 0-1-2 plus isolated 3: the link contains the isolated vertex.
    const Graph g = Graph::from_edges(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    const auto report = mayer_vietoris_check(independence_complex(g), 0, gf2);
    CHECK(report.link.is_acyclic());
    CHECK(report.complex == report.deletion);
    CHECK(report.all_hold());
  }

  TEST_CASE("rejects a vertex whose link is the empty face") {
    const auto delta = independence_complex(support::to_graph(oracle::complete(3)));
    CHECK_THROWS_AS(mayer_vietoris_check(delta, 0, gf2), std::invalid_argument);
  }
}

TEST_SUITE("characteristic") {
  TEST_CASE("GF(2) and GF(32003) agree on GA subgraphs") {
    auto& gen = support::rng();
    for (const auto& [t, k] : {std::pair{2, 4}, std::pair{3, 4}, std::pair{2, 5}, std::pair{3, 5}, std::pair{4, 4}}) {
      const Graph g = ga_prime(t, k);
      for (int round = 0; round < 60; ++round) {
        const Graph w = random_induced(g, gen);
        CHECK(graph_homology(w, gf2) == graph_homology(w, gf32003));
      }
    }
  }

  TEST_CASE("non-primes are rejected") {
    CHECK_THROWS_AS(FieldSpec{4}, std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec{1}, std::invalid_argument);
    CHECK_NOTHROW(FieldSpec{32003});
  }
}
