#include <doctest.h>

#include "betti_lab/complex.hpp"
#include "betti_lab/hochster.hpp"
#include "betti_lab/reference.hpp"
#include "support.hpp"

using namespace betti;

namespace {

const FieldSpec gf2{2};

oracle::Matrix random_matrix(int n, int density, std::mt19937_64& gen) {
  oracle::Matrix m = oracle::empty_graph(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (static_cast<int>(gen() % 100) < density) oracle::connect(m, i, j);
  return m;
}

}  // namespace

TEST_SUITE("hochster engine") {
  TEST_CASE("kernel, serial reference and oracle agree on random graphs") {
    auto& gen = support::rng();
    for (int round = 0; round < 40; ++round) {
      const int n = 2 + static_cast<int>(gen() % 8);
      const auto m = random_matrix(n, 20 + static_cast<int>(gen() % 60), gen);
      const Graph g = support::to_graph(m);
      const auto expected = support::to_diagram(n, oracle::betti(m, 2));
      CHECK(hochster_betti(g, gf2) == expected);
      CHECK(reference::hochster_betti(g, gf2) == expected);
    }
  }

  TEST_CASE("kernel and oracle agree on GA instances over two primes") {
    const std::pair<int, int> instances[] = {{1, 4}, {2, 4}, {2, 5}, {3, 4}, {1, 6}};
    for (const auto& [t, k] : instances) {
      CAPTURE(t);
      CAPTURE(k);
      const auto m = oracle::ga_prime(t, k);
      const Graph g = ga_prime(t, k);
      CHECK(hochster_betti(g, gf2) == support::to_diagram(g.num_vertices(), oracle::betti(m, 2)));
      CHECK(hochster_betti(g, FieldSpec{32003}) == support::to_diagram(g.num_vertices(), oracle::betti(m, 32003)));
    }
  }

  TEST_CASE("GA(t,3)' is the pure diagonal of binomials") {
    for (int t = 1; t <= 4; ++t) {
      const auto d = hochster_betti(ga_prime(t, 3), gf2);
      BettiDiagram expected(2 * t + 2);
      std::uint64_t c = 1;
      for (int i = 0; i <= t; ++i) {
        c = c * static_cast<std::uint64_t>(t + 1 - i) / static_cast<std::uint64_t>(i + 1);
        expected.set(i, 2 * i + 2, c);
      }
      CHECK(d == expected);
      CHECK(regularity(d) == t + 2);
      CHECK(projective_dimension(d) == t);
    }
  }

  TEST_CASE("two disjoint edges") {
    const auto d = hochster_betti(support::to_graph(oracle::disjoint_edges(2)), gf2);
    CHECK(d.entries().size() == 2);
    CHECK(d.at(0, 2) == 2);
    CHECK(d.at(1, 4) == 1);
  }

  TEST_CASE("GA(2,4)' last row") {
    const auto d = hochster_betti(ga_prime(2, 4), gf2);
    CHECK(d.at(4, 8) == 1);
    CHECK(diagram_row(d, 4) == std::vector<std::uint64_t>{0, 0, 0, 0, 1});
    CHECK(regularity(d) == 4);
    CHECK(projective_dimension(d) == 4);
  }

  TEST_CASE("GA(3,4)' invariants") {
    const auto d = hochster_betti(ga_prime(3, 4), gf2);
    CHECK(regularity(d) == 5);
    CHECK(projective_dimension(d) == 6);
  }

  TEST_CASE("edgeless graph gives the zero ideal") {
    const auto d = hochster_betti(Graph(5), gf2);
    CHECK(d.is_zero());
    CHECK_FALSE(regularity(d).has_value());
    CHECK_FALSE(projective_dimension(d).has_value());
  }

  TEST_CASE("thread count does not change the result") {
    const Graph g = ga_prime(3, 5);
    const auto one = hochster_betti(g, gf2, {1, 20});
    CHECK(hochster_betti(g, gf2, {2, 20}) == one);
    CHECK(hochster_betti(g, gf2, {4, 20}) == one);
    CHECK(hochster_betti(g, gf2, {0, 20}) == one);
  }

  TEST_CASE("size cap") {
    const Graph g = ga_prime(3, 6);
    CHECK_THROWS_AS(hochster_betti(g, gf2, {0, 15}), ComputeCapError);
    try {
      hochster_betti(g, gf2, {0, 15});
    } catch (const ComputeCapError& e) {
      CHECK(e.vertices() == 17);
      CHECK(e.cap() == 15);
      CHECK(e.estimated_subsets() == (std::uint64_t{1} << 17));
    }
    CHECK_THROWS_AS(reference::hochster_betti(g, gf2), ComputeCapError);
  }
}

TEST_SUITE("strand formulas") {
  TEST_CASE("component counts give the linear strand") {
    auto& gen = support::rng();
    for (int round = 0; round < 30; ++round) {
      const int n = 2 + static_cast<int>(gen() % 8);
      const auto m = random_matrix(n, 40, gen);
      const Graph g = support::to_graph(m);
      const auto d = support::to_diagram(n, oracle::betti(m, 2));
      const auto rvt = linear_strand_rvt(g);
      REQUIRE(rvt.size() == static_cast<std::size_t>(n - 1));
      for (int i = 0; i + 1 < n; ++i) CHECK(rvt[i] == d.at(i, i + 2));
    }
  }

  TEST_CASE("linear strand of GA(3,6)'") {
    const auto rvt = linear_strand_rvt(ga_prime(3, 6));
    CHECK(rvt[0] == 34);
    CHECK(rvt[1] == 102);
    CHECK(rvt[2] == 102);
    CHECK(rvt[3] == 34);
    for (std::size_t i = 4; i < rvt.size(); ++i) CHECK(rvt[i] == 0);
  }

  TEST_CASE("induced matchings give the main diagonal") {
    auto& gen = support::rng();
    for (int round = 0; round < 30; ++round) {
      const int n = 2 + static_cast<int>(gen() % 8);
      const auto m = random_matrix(n, 40, gen);
      const Graph g = support::to_graph(m);
      const auto d = support::to_diagram(n, oracle::betti(m, 2));
      CHECK(main_diagonal_katzman(g) == main_diagonal(d));
    }
  }

  TEST_CASE("main diagonal values") {
    CHECK(main_diagonal_katzman(ga_prime(3, 5))[2] == 49);
    for (int t = 1; t <= 4; ++t) CHECK(main_diagonal_katzman(ga_prime(t, 4))[t] == 0);
    for (int m = 1; m <= 5; ++m)
      CHECK(main_diagonal_katzman(support::to_graph(oracle::disjoint_edges(m)))[m - 1] == 1);
  }

  TEST_CASE("generators and the position bound") {
    auto& gen = support::rng();
    for (int round = 0; round < 30; ++round) {
      const int n = 2 + static_cast<int>(gen() % 10);
      const Graph g = support::to_graph(random_matrix(n, 35, gen));
      const auto d = hochster_betti(g, gf2);
      CHECK(d.at(0, 2) == g.num_edges());
      for (const auto& [key, value] : d.entries()) {
        const auto [i, j] = key;
        CHECK(value > 0);
        CHECK(j <= n);
        CHECK(j <= 2 * (i + 1));
      }
      if (!d.is_zero()) CHECK(*regularity(d) >= induced_matching_number(g) + 1);
    }
  }
}

TEST_SUITE("alexander dual ideal") {
  TEST_CASE("link formula agrees with Hochster on the dual complex") {
    auto& gen = support::rng();
    for (int round = 0; round < 25; ++round) {
      const int n = 2 + static_cast<int>(gen() % 7);
      const auto m = random_matrix(n, 45, gen);
      const Graph g = support::to_graph(m);
      if (g.num_edges() == 0) continue;
      const auto via_links = dual_betti_via_links(g, gf2);
      REQUIRE(via_links.has_value());
      CHECK(*via_links == hochster_betti_complex(alexander_dual(independence_complex(g)), gf2));
    }
  }

  TEST_CASE("GA(2,4)' regularity of the dual") {
    const Graph g = ga_prime(2, 4);
    const auto primal = hochster_betti(g, gf2);
    const auto dual = dual_betti_via_links(g, gf2);
    REQUIRE(dual.has_value());
    CHECK(regularity(*dual) == 5);
    CHECK(*regularity(*dual) == *projective_dimension(primal) + 1);
    CHECK(*regularity(primal) == *projective_dimension(*dual) + 1);
  }

  TEST_CASE("upper bound holds entrywise") {
    for (const auto& [t, k] : {std::pair{2, 4}, std::pair{3, 4}, std::pair{2, 5}}) {
      const Graph g = ga_prime(t, k);
      const auto primal = hochster_betti(g, gf2);
      const auto dual = *dual_betti_via_links(g, gf2);
      for (const auto& [key, value] : dual.entries())
        CHECK(value <= dual_betti_upper_bound(primal, key.first, key.second));
    }
  }

  TEST_CASE("Stanley-Reisner Hochster reproduces the edge ideal") {
    const Graph g = ga_prime(2, 5);
    CHECK(hochster_betti_complex(independence_complex(g), gf2) == hochster_betti(g, gf2));
  }

  TEST_CASE("edgeless graph has no dual") {
    CHECK_FALSE(dual_betti_via_links(Graph(4), gf2).has_value());
  }

  TEST_CASE("void complex") {
    const auto d = hochster_betti_complex(SimplicialComplex::void_complex(3), gf2);
    CHECK(d.at(0, 0) == 1);
    CHECK(d.entries().size() == 1);
  }
}
