#include "betti_lab/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "betti_lab/formulas.hpp"
#include "betti_lab/hochster.hpp"
#include "betti_lab/io.hpp"

namespace betti {

namespace f = formulas;

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::Reported: return "reported";
  }
  return "?";
}

const VerifyItem* VerifyReport::find(const std::string& id) const {
  for (const auto& item : items)
    if (item.id == id) return &item;
  return nullptr;
}

bool VerifyReport::ok() const {
  return std::none_of(items.begin(), items.end(),
                      [](const VerifyItem& i) { return i.proven && i.status == Status::Fail; });
}

namespace {

std::string join(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string cell(int i, int j, std::uint64_t got, std::uint64_t want) {
  std::ostringstream os;
  os << "beta_{" << i << "," << j << "} = " << got << ", expected " << want;
  return os.str();
}

class Checklist {
 public:
  explicit Checklist(VerifyReport& r) : r_(r) {}

  void add(std::string id, std::string statement, bool proven, bool pass, std::string detail) {
    r_.items.push_back({std::move(id), std::move(statement), proven, pass ? Status::Pass : Status::Fail,
                        std::move(detail)});
  }
  void report(std::string id, std::string statement, bool pass, std::string detail) {
    r_.items.push_back({std::move(id), std::move(statement), false, pass ? Status::Pass : Status::Reported,
                        std::move(detail)});
  }
  void skip(std::string id, std::string statement, std::string why) {
    r_.items.push_back({std::move(id), std::move(statement), false, Status::Skipped, std::move(why)});
  }

 private:
  VerifyReport& r_;
};

/// First entry of `d` violating `ok(i, j, beta)`, as text; empty when none do.
template <class Pred>
std::string first_violation(const BettiDiagram& d, Pred ok) {
  for (const auto& [key, value] : d.entries())
    if (!ok(key.first, key.second, value)) {
      std::ostringstream os;
      os << "beta_{" << key.first << "," << key.second << "} = " << value;
      return os.str();
    }
  return {};
}

std::vector<std::uint64_t> padded_row(const BettiDiagram& d, int row, std::size_t length) {
  std::vector<std::uint64_t> out = diagram_row(d, row);
  out.resize(std::max(out.size(), length), 0);
  return out;
}

HochsterOptions engine_options(const VerifyOptions& o) { return {o.threads, o.max_vertices}; }

void generic_checks(Checklist& c, const Graph& g, const BettiDiagram& d) {
  const std::string bad = first_violation(d, [&](int i, int j, std::uint64_t v) {
    return i != 0 || (j == 2 && v == g.num_edges());
  });
  c.add("edge-generators", "the first column is beta_{0,2} = |E|", true,
        bad.empty() && d.at(0, 2) == g.num_edges(), bad.empty() ? "|E| = " + std::to_string(g.num_edges()) : bad);
  const std::string beyond = first_violation(d, [&](int i, int j, std::uint64_t) {
    return j <= 2 * (i + 1) && j <= g.num_vertices();
  });
  c.add("katzman-bound", "beta_{i,j} = 0 for j > 2(i+1) and for j > n", true, beyond.empty(),
        beyond.empty() ? "no entries outside the admissible region" : beyond);
}

}  // namespace

VerifyReport verify_instance(int t, int k, const VerifyOptions& options) {
  const GAParams params = GAParams::make(t, k, true);
  if (k < 3) throw std::invalid_argument("verification needs k >= 3");
  const int n = params.n();
  const Graph g = ga_prime(t, k);

  VerifyReport r;
  r.t = t;
  r.k = k;
  r.deleted_cycle = true;
  r.diagram = hochster_betti(g, options.field, engine_options(options));
  const BettiDiagram& d = r.diagram;
  Checklist c(r);
  const bool lemma_range = t >= 3 && k >= 3;

  generic_checks(c, g, d);

  // Linear strand.
  const auto strand = padded_row(d, 2, static_cast<std::size_t>(n - 1));
  const auto rvt = linear_strand_rvt(g);
  c.add("linear-strand-components", "row 2 equals the component count of complements", true,
        std::equal(rvt.begin(), rvt.end(), strand.begin()) && strand.size() == rvt.size(),
        "engine " + join(strand) + ", components " + join(rvt));
  std::vector<std::uint64_t> strand_formula;
  for (int i = 0; i < n - 1; ++i) strand_formula.push_back(f::linear_strand(t, k, i));
  // Both rest on the k_{a,b} count, which needs t, k >= 3.
  const std::string strand_detail = "engine " + join(strand) + ", formula " + join(strand_formula);
  if (lemma_range)
    c.add("linear-strand", "beta_{i,i+2} = n C(k-2,i+1)(i+1)/2", true, strand == strand_formula, strand_detail);
  else
    c.report("linear-strand", "beta_{i,i+2} = n C(k-2,i+1)(i+1)/2", strand == strand_formula,
             strand_detail + " (stated for t, k >= 3)");
  {
    bool symmetric = true;
    for (int i = 0; i <= k - 3; ++i)
      if (d.at(i, i + 2) != d.at(k - 3 - i, k - 1 - i)) symmetric = false;
    const std::string statement = "beta_{i,i+2} = beta_{k-3-i,k-1-i} for 0 <= i <= k-3";
    if (lemma_range) c.add("linear-strand-symmetry", statement, true, symmetric, join(strand));
    else c.report("linear-strand-symmetry", statement, symmetric, join(strand) + " (stated for t, k >= 3)");
  }

  // Complete bipartite counts.
  if (is_triangle_free(g)) {
    std::vector<std::uint64_t> sums;
    for (int i = 0; i < n - 1; ++i) {
      std::uint64_t s = 0;
      for (int a = 1; 2 * a <= i + 2; ++a) s += count_induced_complete_bipartite(g, a, i + 2 - a);
      sums.push_back(s);
    }
    c.add("linear-strand-bipartite", "row 2 counts induced K_{a,b} with a+b = i+2 (triangle-free)", true,
          sums == strand, "K_{a,b} sums " + join(sums));
  } else {
    c.skip("linear-strand-bipartite", "row 2 counts induced K_{a,b} with a+b = i+2 (triangle-free)",
           "graph has triangles");
  }
  {
    std::string mismatch;
    for (int a = 1; 2 * a <= n && mismatch.empty(); ++a)
      for (int b = a; a + b <= n; ++b) {
        const std::uint64_t got = count_induced_complete_bipartite(g, a, b);
        const std::uint64_t want = f::kab(t, k, a, b);
        if (got != want) {
          mismatch = "k_{" + std::to_string(a) + "," + std::to_string(b) + "} = " + std::to_string(got) +
                     ", formula " + std::to_string(want);
          break;
        }
      }
    const std::string statement = "k_{a,b} = n C(k-2,a+b-1), halved when a = b";
    if (lemma_range)
      c.add("complete-bipartite-count", statement, true, mismatch.empty(),
            mismatch.empty() ? "all 0 < a <= b agree" : mismatch);
    else
      c.report("complete-bipartite-count", statement, mismatch.empty(),
               (mismatch.empty() ? std::string("all 0 < a <= b agree") : mismatch) + " (stated for t, k >= 3)");
  }
  {
    const Graph co = complement(g);
    const int kappa = vertex_connectivity(co);
    const int want = f::complement_connectivity(t, k);
    const int delta = min_degree(co);
    c.add("complement-connectivity", "kappa(complement) = (t-1)(k-1)+2 = min degree", true,
          kappa == want && delta == want,
          "kappa " + std::to_string(kappa) + ", min degree " + std::to_string(delta) + ", formula " +
              std::to_string(want));
  }

  // Main diagonal.
  {
    const int m = f::matching_number(t, k);
    const std::uint64_t count = count_induced_matchings(g, m);
    const std::uint64_t above = count_induced_matchings(g, m + 1);
    const int number = induced_matching_number(g);
    c.add("induced-matchings", k >= 4 ? "induced matching number t with n(t(k-3)+1)/2 maximum matchings"
                                      : "GA(t,3)' is (t+1)K_2",
          true, number == m && count == f::matching_count(t, k) && above == 0,
          "number " + std::to_string(number) + ", maximum matchings " + std::to_string(count) + ", formula " +
              std::to_string(f::matching_count(t, k)));
    const auto diag = main_diagonal(d);
    const auto katz = main_diagonal_katzman(g);
    bool ok = diag == katz;
    for (std::size_t i = 0; i < diag.size(); ++i) {
      const bool zero = diag[i] == 0;
      if (zero != (static_cast<int>(i) >= m)) ok = false;
    }
    if (m >= 1 && static_cast<std::size_t>(m) <= diag.size() && diag[m - 1] != f::matching_count(t, k)) ok = false;
    c.add("main-diagonal", "beta_{i,2i+2} counts induced matchings, zero iff i >= matching number", true, ok,
          "engine " + join(diag) + ", matchings " + join(katz));
  }

  // Regularity and the high rows.
  const auto reg = regularity(d);
  const auto pd = projective_dimension(d);
  c.add("regularity", "reg = t+2", true, reg && *reg == f::regularity(t),
        "engine " + (reg ? std::to_string(*reg) : std::string("undefined")) + ", formula " +
            std::to_string(f::regularity(t)));
  {
    const std::string bad = first_violation(d, [&](int i, int j, std::uint64_t) {
      return !(j <= n - 1 && j - i >= t + 2);
    });
    c.add("high-rows-vanish", "beta_{i,i+j} = 0 for i+j <= n-1 and j >= t+2", true, bad.empty(),
          bad.empty() ? "no entries" : bad);
  }
  {
    const std::string bad = first_violation(d, [&](int i, int j, std::uint64_t v) {
      return j != n || (i == n - t - 2 && v == 1);
    });
    c.add("last-row", "beta_{i,n} = 1 at i = n-t-2 and 0 otherwise", true,
          bad.empty() && d.at(n - t - 2, n) == 1, bad.empty() ? cell(n - t - 2, n, d.at(n - t - 2, n), 1) : bad);
  }
  {
    const std::string bad = first_violation(d, [&](int, int j, std::uint64_t) { return j != n - 1; });
    c.add("diagonal-n-1", "beta_{i,n-1} = 0 for all i", true, bad.empty(), bad.empty() ? "no entries" : bad);
  }
  {
    const std::uint64_t want = f::penultimate_diagonal_entry(t, k, n - t - 3);
    const std::string bad = first_violation(d, [&](int i, int j, std::uint64_t) {
      return j != n - 2 || i == n - t - 3;
    });
    c.add("diagonal-n-2", "beta_{n-t-3,n-2} = n(t(k-3)+1)/2, other beta_{i,n-2} = 0", true,
          bad.empty() && d.at(n - t - 3, n - 2) == want,
          bad.empty() ? cell(n - t - 3, n - 2, d.at(n - t - 3, n - 2), want) : bad);
  }
  {
    const std::string bad = first_violation(d, [&](int i, int j, std::uint64_t) {
      return !(j > n - k && j < n && j - i != t + 1);
    });
    c.add("vanishing-window", "beta_{i,i+j} = 0 for n-k < i+j < n and j != t+1", true, bad.empty(),
          bad.empty() ? "no entries" : bad);
  }
  c.add("projective-dimension", "pd = t(k-2)", true, pd && *pd == f::projective_dimension(t, k),
        "engine " + (pd ? std::to_string(*pd) : std::string("undefined")) + ", formula " +
            std::to_string(f::projective_dimension(t, k)));

  // Alexander duality.
  {
    const auto dual = dual_betti_via_links(g, options.field, engine_options(options));
    if (!dual) {
      c.skip("alexander-duality", "reg(I) = pd(I^v) + 1 and reg(I^v) = pd(I) + 1", "zero ideal");
      c.skip("dual-betti-bound", "dual Betti numbers bounded by primal ones", "zero ideal");
    } else {
      const auto dreg = regularity(*dual);
      const auto dpd = projective_dimension(*dual);
      const bool ok = reg && pd && dreg && dpd && *reg == *dpd + 1 && *dreg == *pd + 1;
      std::ostringstream os;
      os << "reg " << reg.value_or(-1) << ", pd " << pd.value_or(-1) << ", dual reg " << dreg.value_or(-1)
         << ", dual pd " << dpd.value_or(-1);
      c.add("alexander-duality", "reg(I) = pd(I^v) + 1 and reg(I^v) = pd(I) + 1", true, ok, os.str());
      const std::string bad = first_violation(*dual, [&](int i, int m, std::uint64_t v) {
        return m < i + 1 || i > n - 1 || v <= dual_betti_upper_bound(d, i, m);
      });
      c.add("dual-betti-bound", "beta_{i,m}(I^v) <= sum_a C(m+a,a) beta_{m-i-1,m+a}(I)", true, bad.empty(),
            bad.empty() ? std::to_string(dual->entries().size()) + " dual entries within the bound" : bad);
    }
  }

  // Shapes.
  const DiagramShape shape = diagram_shape(d);
  if (t == 3) {
    const ShapeComparison cmp = compare_shapes(shape, f::t3_shape(k));
    c.add("t3-shape", "support of GA(3,k)' is rows 2..5 with the stated column ranges", true,
          cmp.verdict() == "match", cmp.verdict());
  } else {
    c.skip("t3-shape", "support of GA(3,k)' is rows 2..5 with the stated column ranges", "t != 3");
  }
  if (t >= 3) {
    const ShapeComparison cmp = compare_shapes(shape, f::conjecture_shape(t, k));
    c.report("conjecture-shape", "conjectured support for t, k >= 3", cmp.verdict() == "match", cmp.verdict());
  } else {
    c.skip("conjecture-shape", "conjectured support for t, k >= 3", "t < 3");
  }
  return r;
}

VerifyReport verify_full_instance(int t, int k, const VerifyOptions& options) {
  if (t < 1 || k < 3) throw std::invalid_argument("need t >= 1 and k >= 3");
  const Graph g = generalized_andrasfai(t, k);
  VerifyReport r;
  r.t = t;
  r.k = k;
  r.deleted_cycle = false;
  r.diagram = hochster_betti(g, options.field, engine_options(options));
  Checklist c(r);
  generic_checks(c, g, r.diagram);

  const auto [want_reg, want_pd] = f::ga_full_invariants(t, k);
  const auto reg = regularity(r.diagram);
  const auto pd = projective_dimension(r.diagram);
  const bool reg_ok = reg && *reg == want_reg;
  const bool pd_ok = pd && *pd == want_pd;
  const std::string reg_detail = "engine " + std::to_string(reg.value_or(-1)) + ", claim " + std::to_string(want_reg);
  const std::string pd_detail = "engine " + std::to_string(pd.value_or(-1)) + ", claim " + std::to_string(want_pd);
  if (t >= 2) {
    c.add("full-regularity", "reg(I(GA(t,k))) = t", true, reg_ok, reg_detail);
    c.add("full-projective-dimension", "pd(I(GA(t,k))) = t(k-2)+2", true, pd_ok, pd_detail);
  } else {
    // GA(1,k) = K_{k+1}; an edge ideal always has reg >= 2.
    c.report("full-regularity", "reg(I(GA(t,k))) = t", reg_ok, reg_detail + " (GA(1,k) is complete)");
    c.report("full-projective-dimension", "pd(I(GA(t,k))) = t(k-2)+2", pd_ok,
             pd_detail + " (GA(1,k) is complete)");
  }

  const int k_prime = t * (k - 1) + k + 2;
  const std::string statement = "x -> (t+1)x embeds GA(t,k) as an induced subgraph of GA(t,k')'";
  if (GAParams{t, k_prime, true}.n() > kMaxVertices) {
    c.skip("embedding", statement, "target exceeds 64 vertices");
  } else {
    const auto map = f::embedding_map(t, k, k_prime);
    const Graph target = ga_prime(t, k_prime);
    bool ok = std::set<int>(map.begin(), map.end()).size() == map.size();
    for (int x = 0; x < g.num_vertices() && ok; ++x)
      for (int y = x + 1; y < g.num_vertices(); ++y)
        if (g.adjacent(x, y) != target.adjacent(map[x], map[y])) {
          ok = false;
          break;
        }
    c.add("embedding", statement, true, ok, "k' = " + std::to_string(k_prime));
  }
  return r;
}

std::string ShapeComparison::verdict() const {
  if (extra.empty() && missing.empty()) return "match";
  if (missing.empty()) return "engine-extra";
  if (extra.empty()) return "engine-missing";
  return "engine-extra,engine-missing";
}

ShapeComparison compare_shapes(const DiagramShape& engine, const DiagramShape& predicted) {
  ShapeComparison out;
  std::set_difference(engine.cells.begin(), engine.cells.end(), predicted.cells.begin(), predicted.cells.end(),
                      std::back_inserter(out.extra));
  std::set_difference(predicted.cells.begin(), predicted.cells.end(), engine.cells.begin(), engine.cells.end(),
                      std::back_inserter(out.missing));
  return out;
}

std::vector<ConjectureFinding> scan_conjecture(int t_min, int t_max, int k_min, int k_max,
                                               const VerifyOptions& options) {
  std::vector<ConjectureFinding> out;
  for (int t = t_min; t <= t_max; ++t)
    for (int k = k_min; k <= k_max; ++k) {
      ConjectureFinding finding{t, k, {}, {}};
      if (t < 3 || k < 3) {
        finding.verdict = "skipped: conjecture stated for t, k >= 3";
      } else if (GAParams{t, k, true}.n() > options.max_vertices) {
        finding.verdict = "skipped: " + std::to_string(GAParams{t, k, true}.n()) + " vertices exceeds the cap of " +
                          std::to_string(options.max_vertices);
      } else {
        const BettiDiagram d = hochster_betti(ga_prime(t, k), options.field, engine_options(options));
        finding.comparison = compare_shapes(diagram_shape(d), f::conjecture_shape(t, k));
        finding.verdict = finding.comparison.verdict();
      }
      out.push_back(std::move(finding));
    }
  return out;
}

namespace {

nlohmann::json cells_json(const std::vector<std::pair<int, int>>& cells) {
  auto out = nlohmann::json::array();
  for (const auto& [i, row] : cells) out.push_back({i, row});
  return out;
}

std::string label(const VerifyReport& r) {
  return std::string("GA(") + std::to_string(r.t) + "," + std::to_string(r.k) + ")" + (r.deleted_cycle ? "'" : "");
}

}  // namespace

nlohmann::json report_to_json(const VerifyReport& r) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& item : r.items)
    items.push_back({{"id", item.id},
                     {"statement", item.statement},
                     {"proven", item.proven},
                     {"status", to_string(item.status)},
                     {"detail", item.detail}});
  nlohmann::json predictions = nlohmann::json::array();
  if (r.deleted_cycle)
    for (const auto& p : f::predictions(r.t, r.k)) predictions.push_back(io::formula_report_to_json(p));
  return {{"graph", label(r)},
          {"t", r.t},
          {"k", r.k},
          {"n", r.diagram.ambient_vertices()},
          {"ok", r.ok()},
          {"items", items},
          {"predictions", predictions},
          {"diagram", io::diagram_to_json(r.diagram)}};
}

std::string report_to_text(const VerifyReport& r) {
  std::ostringstream os;
  os << label(r) << "  n = " << r.diagram.ambient_vertices() << "  char " << r.diagram.field().characteristic()
     << '\n';
  std::size_t width = 0;
  for (const auto& item : r.items) width = std::max(width, item.id.size());
  for (const auto& item : r.items) {
    std::string status = to_string(item.status);
    os << "  " << status << std::string(9 - status.size(), ' ') << item.id << std::string(width - item.id.size(), ' ')
       << "  " << item.detail << (item.proven ? "" : "  [not asserted]") << '\n';
  }
  os << (r.ok() ? "all asserted statements hold" : "ASSERTED STATEMENT FAILED") << '\n';
  return os.str();
}

nlohmann::json findings_to_json(const std::vector<ConjectureFinding>& findings) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& fd : findings)
    out.push_back({{"t", fd.t},
                   {"k", fd.k},
                   {"verdict", fd.verdict},
                   {"engine_extra", cells_json(fd.comparison.extra)},
                   {"engine_missing", cells_json(fd.comparison.missing)}});
  return {{"findings", out}};
}

std::string findings_to_text(const std::vector<ConjectureFinding>& findings) {
  std::ostringstream os;
  os << "t  k  verdict\n";
  for (const auto& fd : findings) {
    os << fd.t << "  " << fd.k << "  " << fd.verdict;
    for (const auto& [i, row] : fd.comparison.extra) os << "  +(" << i << "," << row << ")";
    for (const auto& [i, row] : fd.comparison.missing) os << "  -(" << i << "," << row << ")";
    os << '\n';
  }
  return os.str();
}

}  // namespace betti
