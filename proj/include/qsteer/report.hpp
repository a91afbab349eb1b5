#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qsteer/families.hpp"
#include "qsteer/gaussian.hpp"
#include "qsteer/scan.hpp"
#include "qsteer/steering.hpp"

namespace qsteer {

inline constexpr const char* kVersion = "0.1.0";

/// Echo of the analyzed input, carried verbatim into the report.
struct InputInfo {
  std::string kind;    // "family" | "state-file" | "gaussian-cm"
  std::string family;  // family id when kind == "family"
  double parameter = 0.0;
  std::string path;  // source file when kind names a file
  int dim_a = 0;
  int dim_b = 0;
  int modes_a = 0;
  int modes_b = 0;
};

struct AnalysisConfig {
  std::variant<FamilySpec, BipartiteState, GaussianCM> input;
  std::vector<Criterion> criteria;    // evaluated in this order
  std::vector<Direction> directions;  // evaluated in this order
  InputInfo echo;
};

struct ThresholdResult {
  std::string family;
  std::string criterion;
  std::string direction;
  double lo;
  double hi;
  double tol;
  double threshold;
};

struct Report {
  std::string version;
  InputInfo input;
  std::vector<SteeringVerdict> verdicts;
  std::vector<WitnessReport> witnesses;
  std::optional<ThresholdResult> threshold;
};

/// Evaluates every requested (criterion, direction) pair exactly once.
Report run_analysis(const AnalysisConfig& config);

struct ScanRequest {
  Family family;
  ScanCriterion criterion;
  Direction direction;
  double lo = 0.0;
  double hi = 1.0;
  double tol = 1e-6;
};

Report run_scan(const ScanRequest& request);

/// Machine-readable report. Numbers are formatted at 12 significant digits,
/// so identical inputs serialize byte-identically.
std::string to_json_string(const Report& report);

/// Human-readable report.
std::string to_text(const Report& report);

}  // namespace qsteer
