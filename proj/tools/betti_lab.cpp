// betti_lab: build GA graphs, compute Betti diagrams, run verification suites.
//
// Exit codes: 0 ok, 1 an asserted statement failed, 2 usage error,
// 3 compute cap refused the run.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "betti_lab/complex.hpp"
#include "betti_lab/graph.hpp"
#include "betti_lab/hochster.hpp"
#include "betti_lab/io.hpp"
#include "betti_lab/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

constexpr int kFastCap = 15;
constexpr int kLongCap = 20;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  int t = 3;
  int k = 4;
  std::string variant = "prime";
  std::string cycle;
  std::string graph_path;
};

struct Common {
  unsigned characteristic = 2;
  int threads = 0;
  std::string format = "table";
  std::string tier = "fast";
  std::string out;
};

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer in list: '" + item + "'");
    }
    if (used != item.size()) throw UsageError("not an integer in list: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

/// "a", "a:b" or "a-b"; min > max gives an empty range.
std::pair<int, int> parse_range(const std::string& text) {
  const auto sep = text.find_first_of(":-", 1);
  try {
    if (sep == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 1))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "', expected a or a:b");
  }
}

betti::Graph load_graph(const GraphSource& src) {
  if (!src.graph_path.empty())
    return betti::io::graph_from_json(betti::io::json::parse(betti::io::read_file(src.graph_path)));
  if (src.variant == "full") return betti::generalized_andrasfai(src.t, src.k);
  if (src.variant == "prime") return betti::ga_prime(src.t, src.k);
  if (src.variant == "minus-cycle") {
    if (src.cycle.empty()) throw UsageError("--variant minus-cycle needs --cycle v0,v1,...");
    const auto cycle = parse_list(src.cycle);
    return betti::remove_cycle_edges(betti::generalized_andrasfai(src.t, src.k), cycle);
  }
  throw UsageError("unknown variant '" + src.variant + "'");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw UsageError("cannot write " + c.out);
  file << text;
}

int cap_for(const Common& c) { return c.tier == "long" ? kLongCap : kFastCap; }

void add_source(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--t", src.t, "GA parameter t")->check(CLI::PositiveNumber);
  cmd->add_option("--k", src.k, "GA parameter k")->check(CLI::Range(2, 64));
  cmd->add_option("--variant", src.variant, "full, prime or minus-cycle")
      ->check(CLI::IsMember({"full", "prime", "minus-cycle"}));
  cmd->add_option("--cycle", src.cycle, "Hamiltonian cycle to delete, e.g. \"0,4,8,...\"");
  cmd->add_option("--graph", src.graph_path, "read a graph JSON file instead");
}

void add_common(CLI::App* cmd, Common& c, bool with_format) {
  cmd->add_option("--char", c.characteristic, "field characteristic (prime)");
  cmd->add_option("--threads", c.threads, "OpenMP threads, 0 for the runtime default")
      ->envname("BETTI_LAB_THREADS")
      ->check(CLI::NonNegativeNumber);
  if (with_format)
    cmd->add_option("--format", c.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--tier", c.tier, "fast (n <= 15) or long (n <= 20)")->check(CLI::IsMember({"fast", "long"}));
  cmd->add_option("--out", c.out, "write output to a file");
}

std::string summary_line(const betti::BettiDiagram& d) {
  const auto reg = betti::regularity(d);
  const auto pd = betti::projective_dimension(d);
  if (!reg) return "reg undefined, pd undefined (zero ideal)\n";
  return "reg " + std::to_string(*reg) + ", pd " + std::to_string(*pd) + "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Betti numbers of edge ideals of Generalized Andrasfai graphs"};
  app.require_subcommand(1);

  GraphSource src;
  Common common;
  bool full = false;
  bool dual = false;
  std::string t_range = "3";
  std::string k_range = "4:5";

  auto* build = app.add_subcommand("build", "emit a graph as JSON");
  add_source(build, src);
  build->add_option("--out", common.out, "write output to a file");

  auto* betti_cmd = app.add_subcommand("betti", "compute the Betti diagram of I(G)");
  add_source(betti_cmd, src);
  add_common(betti_cmd, common, true);
  betti_cmd->add_flag("--dual", dual, "diagram of the Alexander dual ideal instead");

  auto* verify = app.add_subcommand("verify", "check the closed-form statements on GA(t,k)'");
  verify->add_option("--t", src.t, "GA parameter t")->check(CLI::PositiveNumber);
  verify->add_option("--k", src.k, "GA parameter k")->check(CLI::Range(3, 64));
  verify->add_flag("--full", full, "check the undeleted GA(t,k) claims instead");
  add_common(verify, common, true);

  auto* conjecture = app.add_subcommand("conjecture", "compare engine shapes with the conjectured shape");
  conjecture->add_option("--t-range", t_range, "t values, a or a:b");
  conjecture->add_option("--k-range", k_range, "k values, a or a:b");
  add_common(conjecture, common, true);

  auto* complex_cmd = app.add_subcommand("complex", "emit the independence complex as JSON");
  add_source(complex_cmd, src);
  complex_cmd->add_flag("--dual", dual, "emit the Alexander dual instead");
  complex_cmd->add_option("--out", common.out, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (common.format == "csv" && (verify->parsed() || conjecture->parsed()))
    throw UsageError("csv output is only available for betti");
  const betti::FieldSpec field(common.characteristic);
  betti::VerifyOptions options{field, common.threads, cap_for(common)};

  if (build->parsed()) {
    emit(common, betti::io::graph_to_json(load_graph(src)).dump() + "\n");
    return kExitOk;
  }
  if (complex_cmd->parsed()) {
    auto delta = betti::independence_complex(load_graph(src));
    if (dual) delta = betti::alexander_dual(delta);
    emit(common, betti::io::complex_to_json(delta).dump() + "\n");
    return kExitOk;
  }
  if (betti_cmd->parsed()) {
    const betti::Graph g = load_graph(src);
    const betti::HochsterOptions ho{common.threads, cap_for(common)};
    betti::BettiDiagram d;
    if (dual) {
      const auto dd = betti::dual_betti_via_links(g, field, ho);
      if (!dd) {
        emit(common, common.format == "json" ? std::string("{\"zero_ideal\":true}\n") : "zero ideal\n");
        return kExitOk;
      }
      d = *dd;
    } else {
      d = betti::hochster_betti(g, field, ho);
    }
    if (common.format == "json") emit(common, betti::io::diagram_to_json(d).dump() + "\n");
    else if (common.format == "csv") emit(common, betti::io::diagram_to_csv(d));
    else emit(common, betti::io::diagram_to_table(d) + summary_line(d));
    return kExitOk;
  }
  if (verify->parsed()) {
    const auto report = full ? betti::verify_full_instance(src.t, src.k, options)
                             : betti::verify_instance(src.t, src.k, options);
    emit(common, common.format == "json" ? betti::report_to_json(report).dump(2) + "\n"
                                         : betti::report_to_text(report));
    return report.ok() ? kExitOk : kExitFailed;
  }
  if (conjecture->parsed()) {
    const auto [t0, t1] = parse_range(t_range);
    const auto [k0, k1] = parse_range(k_range);
    const auto findings = betti::scan_conjecture(t0, t1, k0, k1, options);
    emit(common, common.format == "json" ? betti::findings_to_json(findings).dump(2) + "\n"
                                         : betti::findings_to_text(findings));
    return kExitOk;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const betti::ComputeCapError& e) {
    std::cerr << "refused: " << e.what() << " (use --tier long for up to " << kLongCap << " vertices)\n";
    return kExitCap;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
