#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qsteer/report.hpp"
#include "qsteer/state_io.hpp"

namespace {

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

qsteer::Criterion criterion_from_flag(const std::string& name) {
  if (name == "prop1") return qsteer::Criterion::Prop1;
  if (name == "prop2") return qsteer::Criterion::Prop2;
  if (name == "witness") return qsteer::Criterion::LurWitness;
  if (name == "gaussian") return qsteer::Criterion::Gaussian;
  throw qsteer::ParseError("unknown criterion '" + name +
                           "' (expected prop1, prop2, witness or gaussian)");
}

void emit(const qsteer::Report& report, const std::string& json_path) {
  if (json_path == "-") {
    std::cout << qsteer::to_json_string(report);
    return;
  }
  std::cout << qsteer::to_text(report);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      throw qsteer::Error("cannot write '" + json_path + "'");
    }
    out << qsteer::to_json_string(report);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steerability certification via covariance matrices of local observables"};
  app.require_subcommand(1);

  // analyze
  std::string family_id;
  double param = 0.0;
  std::string state_path;
  std::string gaussian_path;
  std::string criteria_csv;
  std::string directions_csv = "ab,ba";
  std::string json_path;

  CLI::App* analyze = app.add_subcommand("analyze", "Evaluate steering criteria on one input");
  auto* fam_opt = analyze->add_option("--family", family_id, "Built-in family id");
  auto* par_opt = analyze->add_option("--param", param, "Family parameter in [0,1]");
  auto* sta_opt = analyze->add_option("--state", state_path, "Explicit state JSON file");
  auto* gau_opt = analyze->add_option("--gaussian", gaussian_path, "Gaussian CM JSON file");
  analyze->add_option("--criteria", criteria_csv,
                      "Comma list of prop1,prop2,witness,gaussian (default: all applicable)");
  analyze->add_option("--direction", directions_csv, "Comma list of ab,ba (default both)");
  analyze->add_option("--json", json_path, "Write machine-readable report here ('-' = stdout)");
  fam_opt->needs(par_opt);
  fam_opt->excludes(sta_opt)->excludes(gau_opt);
  sta_opt->excludes(gau_opt);

  // scan
  std::string scan_family;
  std::string scan_criterion = "prop1";
  std::string scan_direction = "ab";
  double lo = 0.0;
  double hi = 1.0;
  double tol = 1e-6;
  std::string scan_json_path;

  CLI::App* scan = app.add_subcommand("scan", "Bisect the violation threshold of a family");
  scan->add_option("--family", scan_family, "Built-in family id")->required();
  scan->add_option("--criterion", scan_criterion, "prop1, prop2, witness or min");
  scan->add_option("--direction", scan_direction, "ab or ba");
  scan->add_option("--lo", lo, "Lower end of the parameter bracket");
  scan->add_option("--hi", hi, "Upper end of the parameter bracket");
  scan->add_option("--tol", tol, "Absolute parameter tolerance");
  scan->add_option("--json", scan_json_path, "Write machine-readable report here ('-' = stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      qsteer::AnalysisConfig config;
      bool gaussian_input = false;
      if (!gaussian_path.empty()) {
        qsteer::GaussianCM cm = qsteer::read_gaussian_cm_file(gaussian_path);
        config.echo.kind = "gaussian-cm";
        config.echo.path = gaussian_path;
        config.echo.modes_a = cm.modes_a;
        config.echo.modes_b = cm.modes_b;
        config.input = std::move(cm);
        gaussian_input = true;
      } else if (!state_path.empty()) {
        qsteer::BipartiteState state = qsteer::read_state_file(state_path);
        config.echo.kind = "state-file";
        config.echo.path = state_path;
        config.echo.dim_a = state.dim_a;
        config.echo.dim_b = state.dim_b;
        config.input = std::move(state);
      } else if (!family_id.empty()) {
        qsteer::FamilySpec spec;
        spec.family = qsteer::family_from_name(family_id);
        spec.parameter = param;
        qsteer::BipartiteState probe = qsteer::family_state(spec);
        config.echo.kind = "family";
        config.echo.family = family_id;
        config.echo.parameter = param;
        config.echo.dim_a = probe.dim_a;
        config.echo.dim_b = probe.dim_b;
        config.input = std::move(spec);
      } else {
        throw qsteer::Error("analyze needs --family/--param, --state or --gaussian");
      }

      if (criteria_csv.empty()) {
        criteria_csv = gaussian_input ? "gaussian" : "prop1,prop2,witness";
      }
      for (const auto& name : split_list(criteria_csv)) {
        config.criteria.push_back(criterion_from_flag(name));
      }
      for (const auto& name : split_list(directions_csv)) {
        config.directions.push_back(qsteer::direction_from_name(name));
      }
      emit(qsteer::run_analysis(config), json_path);
    } else {
      qsteer::ScanRequest request;
      request.family = qsteer::family_from_name(scan_family);
      request.criterion = qsteer::scan_criterion_from_name(scan_criterion);
      request.direction = qsteer::direction_from_name(scan_direction);
      request.lo = lo;
      request.hi = hi;
      request.tol = tol;
      emit(qsteer::run_scan(request), scan_json_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
