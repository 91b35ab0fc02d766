#pragma once

// Brute-force reference computations used only by tests. Nothing here calls
// into the library's graph, complex or homology code: graphs are plain
// adjacency matrices and faces are sorted vectors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
using Face = std::vector<int>;

inline Matrix empty_graph(int n) { return Matrix(static_cast<std::size_t>(n), std::vector<bool>(n, false)); }

inline void connect(Matrix& g, int u, int v) {
  g[u][v] = true;
  g[v][u] = true;
}

/// GA(t,k)' straight from its defining congruence: for 0 <= i < j < n,
/// {i,j} is an edge iff j - i = 1 mod t and j - i is neither 1 nor n-1.
inline Matrix ga_prime(int t, int k) {
  const int n = t * (k - 1) + 2;
  Matrix g = empty_graph(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int d = j - i;
      if (d % t == 1 % t && d != 1 && d != n - 1) connect(g, i, j);
    }
  return g;
}

/// GA(t,k): differences congruent to 1 mod t, taken in both directions.
inline Matrix ga_full(int t, int k) {
  const int n = t * (k - 1) + 2;
  Matrix g = empty_graph(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int d = j - i;
      if (d % t == 1 % t || (n - d) % t == 1 % t) connect(g, i, j);
    }
  return g;
}

inline Matrix disjoint_edges(int m) {
  Matrix g = empty_graph(2 * m);
  for (int i = 0; i < m; ++i) connect(g, 2 * i, 2 * i + 1);
  return g;
}

inline Matrix cycle(int n) {
  Matrix g = empty_graph(n);
  for (int i = 0; i < n; ++i) connect(g, i, (i + 1) % n);
  return g;
}

inline Matrix complete(int n) {
  Matrix g = empty_graph(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) connect(g, i, j);
  return g;
}

inline Matrix complete_bipartite(int a, int b) {
  Matrix g = empty_graph(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) connect(g, i, a + j);
  return g;
}

inline Matrix complement(const Matrix& g) {
  Matrix h = g;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) h[i][j] = i != j && !g[i][j];
  return h;
}

inline std::size_t edge_count(const Matrix& g) {
  std::size_t e = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) e += g[i][j];
  return e;
}

inline std::vector<int> members(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v)
    if (mask >> v & 1) out.push_back(v);
  return out;
}

inline Matrix induced(const Matrix& g, const std::vector<int>& vs) {
  Matrix h = empty_graph(static_cast<int>(vs.size()));
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = 0; b < vs.size(); ++b) h[a][b] = g[vs[a]][vs[b]];
  return h;
}

/// Components of g by depth-first search.
inline int components(const Matrix& g) {
  const int n = static_cast<int>(g.size());
  std::vector<bool> seen(n, false);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if (g[v][w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return count;
}

/// Every independent set (including the empty one), by exhaustive subset test.
inline std::vector<Face> independent_sets(const Matrix& g) {
  const int n = static_cast<int>(g.size());
  std::vector<Face> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto vs = members(s);
    bool ok = true;
    for (std::size_t a = 0; a < vs.size() && ok; ++a)
      for (std::size_t b = a + 1; b < vs.size() && ok; ++b) ok = !g[vs[a]][vs[b]];
    if (ok) out.push_back(vs);
  }
  return out;
}

/// f[0] counts the empty face.
inline std::vector<std::size_t> f_vector(const std::vector<Face>& faces) {
  std::vector<std::size_t> f;
  for (const auto& face : faces) {
    if (f.size() <= face.size()) f.resize(face.size() + 1, 0);
    ++f[face.size()];
  }
  return f;
}

/// Rank mod p by plain row reduction on int64 entries.
inline std::size_t rank_mod(std::vector<std::vector<long long>> m, long long p) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  auto inverse = [p](long long a) {
    long long result = 1, base = ((a % p) + p) % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && ((m[pivot][c] % p) + p) % p == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const long long inv = inverse(m[rank][c]);
    for (auto& x : m[rank]) x = ((x * inv) % p + p) % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank) continue;
      const long long factor = ((m[r][c] % p) + p) % p;
      if (factor == 0) continue;
      for (std::size_t cc = 0; cc < cols; ++cc) m[r][cc] = ((m[r][cc] - factor * m[rank][cc]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Reduced homology dims indexed by degree + 1 (trailing zeros removed) of
/// the complex whose faces are `faces` (must include the empty face).
inline std::vector<std::uint64_t> reduced_homology(const std::vector<Face>& faces, long long p) {
  std::map<std::size_t, std::vector<Face>> by_size;
  for (const auto& f : faces) by_size[f.size()].push_back(f);
  for (auto& [size, list] : by_size) std::sort(list.begin(), list.end());
  const std::size_t top = by_size.empty() ? 0 : by_size.rbegin()->first;
  // rank of the map from size-s faces to size-(s-1) faces.
  std::vector<std::size_t> rk(top + 2, 0);
  for (std::size_t s = 1; s <= top; ++s) {
    const auto& hi = by_size[s];
    const auto& lo = by_size[s - 1];
    if (hi.empty() || lo.empty()) continue;
    std::vector<std::vector<long long>> m(hi.size(), std::vector<long long>(lo.size(), 0));
    for (std::size_t r = 0; r < hi.size(); ++r)
      for (std::size_t drop = 0; drop < hi[r].size(); ++drop) {
        Face f = hi[r];
        f.erase(f.begin() + static_cast<long>(drop));
        const auto c = static_cast<std::size_t>(std::lower_bound(lo.begin(), lo.end(), f) - lo.begin());
        m[r][c] = drop % 2 == 0 ? 1 : p - 1;
      }
    rk[s] = rank_mod(std::move(m), p);
  }
  std::vector<std::uint64_t> dims(top + 1, 0);
  for (std::size_t s = 0; s <= top; ++s) {
    const std::size_t fs = by_size.count(s) ? by_size[s].size() : 0;
    dims[s] = fs - rk[s] - (s + 1 <= top ? rk[s + 1] : 0);
  }
  while (!dims.empty() && dims.back() == 0) dims.pop_back();
  return dims;
}

inline std::vector<std::uint64_t> graph_homology(const Matrix& g, long long p) {
  return reduced_homology(independent_sets(g), p);
}

/// beta_{i,j} from Hochster's formula over every induced subgraph.
inline std::map<std::pair<int, int>, std::uint64_t> betti(const Matrix& g, long long p) {
  const int n = static_cast<int>(g.size());
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const auto vs = members(s);
    const auto dims = graph_homology(induced(g, vs), p);
    for (std::size_t idx = 0; idx < dims.size(); ++idx) {
      if (dims[idx] == 0) continue;
      const int j = static_cast<int>(vs.size());
      const int i = j - static_cast<int>(idx) - 1;
      if (i >= 0) out[{i, j}] += dims[idx];
    }
  }
  return out;
}

/// Induced matchings with m edges: 2m-sets on which every vertex has induced degree 1.
inline std::uint64_t induced_matchings(const Matrix& g, int m) {
  const int n = static_cast<int>(g.size());
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto vs = members(s);
    if (static_cast<int>(vs.size()) != 2 * m) continue;
    bool ok = true;
    for (int a : vs) {
      int deg = 0;
      for (int b : vs) deg += g[a][b];
      if (deg != 1) ok = false;
    }
    count += ok;
  }
  return count;
}

/// Induced K_{a,b} by trying every split of every (a+b)-set.
inline std::uint64_t induced_complete_bipartite(const Matrix& g, int a, int b) {
  const int n = static_cast<int>(g.size());
  std::set<std::uint64_t> found;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto vs = members(s);
    if (static_cast<int>(vs.size()) != a + b) continue;
    for (std::uint64_t part = 0; part < (std::uint64_t{1} << vs.size()); ++part) {
      if (__builtin_popcountll(part) != a) continue;
      bool ok = true;
      for (std::size_t x = 0; x < vs.size() && ok; ++x)
        for (std::size_t y = x + 1; y < vs.size() && ok; ++y) {
          const bool same = ((part >> x) & 1) == ((part >> y) & 1);
          ok = g[vs[x]][vs[y]] != same;
        }
      if (ok) found.insert(s);
    }
  }
  return found.size();
}

/// Smallest vertex set whose removal disconnects g or leaves one vertex.
inline int cut_connectivity(const Matrix& g) {
  const int n = static_cast<int>(g.size());
  if (components(g) > 1) return 0;
  for (int size = 0; size < n; ++size)
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      if (__builtin_popcountll(s) != size) continue;
      std::vector<int> rest;
      for (int v = 0; v < n; ++v)
        if (!(s >> v & 1)) rest.push_back(v);
      if (rest.size() <= 1 || components(induced(g, rest)) > 1) return size;
    }
  return n - 1;
}

}  // namespace oracle
