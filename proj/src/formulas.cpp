#include "betti_lab/formulas.hpp"

#include <stdexcept>

namespace betti::formulas {

namespace {

void require_family(int t, int k) {
  if (t < 1 || k < 2) throw std::invalid_argument("need t >= 1 and k >= 2");
}

}  // namespace

std::uint64_t binomial(int n, int r) {
  if (n < 0 || r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return c;
}

int vertex_count(int t, int k) {
  require_family(t, k);
  return t * (k - 1) + 2;
}

std::uint64_t kab(int t, int k, int a, int b) {
  if (a <= 0 || a > b) throw std::invalid_argument("k_{a,b} needs 0 < a <= b");
  const std::uint64_t n = static_cast<std::uint64_t>(vertex_count(t, k));
  const std::uint64_t c = binomial(k - 2, a + b - 1);
  return a == b ? n * c / 2 : n * c;
}

std::uint64_t linear_strand(int t, int k, int i) {
  if (i < 0) return 0;
  const std::uint64_t n = static_cast<std::uint64_t>(vertex_count(t, k));
  return n * binomial(k - 2, i + 1) * static_cast<std::uint64_t>(i + 1) / 2;
}

std::uint64_t matching_count(int t, int k) {
  require_family(t, k);
  if (k == 2) return 0;
  if (k == 3) return 1;
  const std::uint64_t n = static_cast<std::uint64_t>(vertex_count(t, k));
  return n * static_cast<std::uint64_t>(t * (k - 3) + 1) / 2;
}

int matching_number(int t, int k) {
  require_family(t, k);
  if (k == 2) return 0;
  return k == 3 ? t + 1 : t;
}

int regularity(int t) { return t + 2; }

int projective_dimension(int t, int k) {
  require_family(t, k);
  return t * (k - 2);
}

std::uint64_t last_row_entry(int t, int k, int i) {
  return i == vertex_count(t, k) - t - 2 ? 1 : 0;
}

std::uint64_t penultimate_diagonal_entry(int t, int k, int i) {
  const int n = vertex_count(t, k);
  if (i != n - t - 3) return 0;
  return static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(t * (k - 3) + 1) / 2;
}

int complement_connectivity(int t, int k) {
  require_family(t, k);
  return (t - 1) * (k - 1) + 2;
}

bool predicted_zero(int t, int k, int i, int j) {
  const int n = vertex_count(t, k);
  const int row = j - i;
  if (i < 0 || row < 2 || j > n) return true;
  if (i == 0) return row != 2;
  if (j > 2 * (i + 1)) return true;
  if (j == n) return i != n - t - 2;
  if (j == n - 1) return true;
  if (j == n - 2 && i != n - t - 3) return true;
  if (row >= t + 2) return true;
  return j > n - k && row != t + 1;
}

BettiDiagram k3_diagram(int t) {
  if (t < 1) throw std::invalid_argument("need t >= 1");
  BettiDiagram d(2 * t + 2, FieldSpec{});
  for (int i = 0; i <= t; ++i) d.set(i, 2 * i + 2, binomial(t + 1, i + 1));
  return d;
}

DiagramShape t3_shape(int k) {
  if (k < 3) throw std::invalid_argument("need k >= 3");
  DiagramShape s;
  for (int i = 0; i <= k - 3; ++i) s.cells.emplace(i, 2);
  for (int i = 1; i <= 2 * k - 5; ++i) s.cells.emplace(i, 3);
  for (int i = 2; i <= 3 * k - 7; ++i) s.cells.emplace(i, 4);
  s.cells.emplace(3 * k - 6, 5);
  return s;
}

DiagramShape conjecture_shape(int t, int k) {
  if (t < 3 || k < 3) throw std::invalid_argument("stated for t, k >= 3");
  DiagramShape s;
  for (int j = 2; j <= t + 1; ++j)
    for (int i = j - 2; i <= (j - 1) * (k - 2) - 1; ++i) s.cells.emplace(i, j);
  s.cells.emplace(t * (k - 2), t + 2);
  return s;
}

std::pair<int, int> ga_full_invariants(int t, int k) {
  require_family(t, k);
  return {t, t * (k - 2) + 2};
}

std::vector<int> embedding_map(int t, int k, int k_prime) {
  require_family(t, k);
  if (k_prime <= t * (k - 1) + k + 1)
    throw std::invalid_argument("embedding needs k' > t(k-1) + k + 1");
  const int n = vertex_count(t, k);
  const int n_prime = vertex_count(t, k_prime);
  std::vector<int> map;
  for (int x = 0; x < n; ++x) map.push_back((t + 1) * x % n_prime);
  return map;
}

std::vector<FormulaReport> predictions(int t, int k) {
  const int n = vertex_count(t, k);
  std::vector<FormulaReport> out;
  for (int i = 0; i <= k - 3; ++i)
    out.push_back({"beta", {{"i", i}, {"j", i + 2}}, linear_strand(t, k, i), "linear-strand"});
  if (k >= 4)
    out.push_back({"beta", {{"i", t - 1}, {"j", 2 * t}}, matching_count(t, k), "main-diagonal"});
  out.push_back({"induced_matching_number", {}, static_cast<std::uint64_t>(matching_number(t, k)),
                 "induced-matchings"});
  out.push_back({"regularity", {}, static_cast<std::uint64_t>(regularity(t)), "regularity"});
  out.push_back({"projective_dimension", {}, static_cast<std::uint64_t>(projective_dimension(t, k)),
                 "projective-dimension"});
  out.push_back({"beta", {{"i", n - t - 2}, {"j", n}}, 1, "last-row"});
  out.push_back({"beta", {{"i", n - t - 3}, {"j", n - 2}}, penultimate_diagonal_entry(t, k, n - t - 3),
                 "diagonal-n-2"});
  out.push_back({"complement_connectivity", {}, static_cast<std::uint64_t>(complement_connectivity(t, k)),
                 "complement-connectivity"});
  for (int a = 1; 2 * a <= k - 1; ++a)
    for (int b = a; a + b <= k - 1; ++b)
      out.push_back({"k_ab", {{"a", a}, {"b", b}}, kab(t, k, a, b), "complete-bipartite-count"});
  for (auto& r : out) {
    r.params["t"] = t;
    r.params["k"] = k;
  }
  return out;
}

}  // namespace betti::formulas
