#pragma once

#include <random>
#include <vector>

#include "betti_lab/diagram.hpp"
#include "betti_lab/graph.hpp"
#include "oracles.hpp"

namespace support {

inline betti::Graph to_graph(const oracle::Matrix& m) {
  std::vector<betti::VertexSet> rows(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j]) rows[i] |= betti::bit(static_cast<int>(j));
  return betti::Graph::from_adjacency(std::move(rows));
}

inline oracle::Matrix to_matrix(const betti::Graph& g) {
  oracle::Matrix m = oracle::empty_graph(g.num_vertices());
  for (const auto& [u, v] : g.edges()) oracle::connect(m, u, v);
  return m;
}

inline betti::BettiDiagram to_diagram(int n, const std::map<std::pair<int, int>, std::uint64_t>& entries) {
  betti::BettiDiagram d(n);
  for (const auto& [key, value] : entries) d.set(key.first, key.second, value);
  return d;
}

/// Profile dims from the oracle (index = degree + 1).
inline std::vector<std::uint64_t> oracle_profile(const betti::Graph& g, long long p = 2) {
  return oracle::graph_homology(to_matrix(g), p);
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed2024ULL);
  return gen;
}

inline betti::VertexSet random_subset(int n, std::mt19937_64& gen) {
  std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << n) - 1);
  return dist(gen);
}

}  // namespace support
