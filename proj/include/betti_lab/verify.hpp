#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "betti_lab/diagram.hpp"
#include "betti_lab/graph.hpp"
#include "betti_lab/linalg.hpp"

namespace betti {

enum class Status { Pass, Fail, Skipped, Reported };

std::string to_string(Status s);

/// One checked statement. `proven` marks statements whose hypotheses hold
/// for the instance; only failures of proven items fail a verification run.
struct VerifyItem {
  std::string id;
  std::string statement;
  bool proven = true;
  Status status = Status::Skipped;
  std::string detail;
};

struct VerifyOptions {
  FieldSpec field{};
  int threads = 0;
  int max_vertices = 15;
};

struct VerifyReport {
  int t = 0;
  int k = 0;
  bool deleted_cycle = true;
  BettiDiagram diagram;
  std::vector<VerifyItem> items;

  const VerifyItem* find(const std::string& id) const;
  /// True when no proven item failed.
  bool ok() const;
};

/// Runs every engine-vs-formula identity in scope for GA(t,k)'.
/// Throws ComputeCapError past options.max_vertices.
VerifyReport verify_instance(int t, int k, const VerifyOptions& options = {});

/// reg/pd of the undeleted graph GA(t,k) against the (t, t(k-2)+2) claim,
/// plus the induced embedding into GA(t,k')'. The claim fails for t = 1
/// (K_{k+1}), so that case is reported rather than asserted.
VerifyReport verify_full_instance(int t, int k, const VerifyOptions& options = {});

/// Compares an engine shape with a predicted one.
struct ShapeComparison {
  std::vector<std::pair<int, int>> extra;    ///< in the engine, not predicted
  std::vector<std::pair<int, int>> missing;  ///< predicted, not in the engine
  /// "match", "engine-extra", "engine-missing" or "engine-extra,engine-missing".
  std::string verdict() const;
};

ShapeComparison compare_shapes(const DiagramShape& engine, const DiagramShape& predicted);

struct ConjectureFinding {
  int t = 0;
  int k = 0;
  /// Comparison verdict, or "skipped: ..." when the instance was not computed.
  std::string verdict;
  ShapeComparison comparison;
};

/// Engine shape of GA(t,k)' against the conjectured shape for every (t, k)
/// in the ranges. Instances outside t, k >= 3 or above the vertex cap are
/// listed as skipped. Never throws for cap reasons.
std::vector<ConjectureFinding> scan_conjecture(int t_min, int t_max, int k_min, int k_max,
                                               const VerifyOptions& options = {});

nlohmann::json report_to_json(const VerifyReport& r);
std::string report_to_text(const VerifyReport& r);
nlohmann::json findings_to_json(const std::vector<ConjectureFinding>& findings);
std::string findings_to_text(const std::vector<ConjectureFinding>& findings);

}  // namespace betti
