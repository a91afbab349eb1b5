#include "qsteer/report.hpp"

#include <cstdio>
#include <json.hpp>
#include <sstream>

namespace qsteer {
namespace {

using Json = nlohmann::ordered_json;

// Fixed 12-significant-digit formatting keeps reports byte-stable.
Json num12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return Json(std::stod(buf));
}

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::string(buf);
}

Json input_json(const InputInfo& info) {
  Json j;
  j["kind"] = info.kind;
  if (!info.family.empty()) {
    j["family"] = info.family;
  }
  if (info.kind == "family") {
    j["parameter"] = num12(info.parameter);
  }
  if (!info.path.empty()) {
    j["path"] = info.path;
  }
  if (info.dim_a > 0) {
    j["dimA"] = info.dim_a;
    j["dimB"] = info.dim_b;
  }
  if (info.modes_a > 0) {
    j["modesA"] = info.modes_a;
    j["modesB"] = info.modes_b;
  }
  return j;
}

Json verdict_json(const SteeringVerdict& v) {
  Json j;
  j["criterion"] = criterion_name(v.criterion);
  j["direction"] = direction_name(v.direction);
  j["lhs"] = num12(v.lhs);
  j["rhs"] = num12(v.rhs);
  j["violated"] = v.violated;
  j["margin"] = num12(v.margin);
  return j;
}

Json observables_json(const ObservableSet& set) {
  Json arr = Json::array();
  for (const auto& o : set.observables()) {
    Json re = Json::array();
    Json im = Json::array();
    for (Eigen::Index i = 0; i < o.rows(); ++i) {
      Json re_row = Json::array();
      Json im_row = Json::array();
      for (Eigen::Index j = 0; j < o.cols(); ++j) {
        re_row.push_back(num12(o(i, j).real()));
        im_row.push_back(num12(o(i, j).imag()));
      }
      re.push_back(std::move(re_row));
      im.push_back(std::move(im_row));
    }
    arr.push_back(Json{{"re", std::move(re)}, {"im", std::move(im)}});
  }
  return arr;
}

Json witness_json(const WitnessReport& w) {
  Json j;
  j["direction"] = direction_name(w.direction);
  j["gain"] = num12(w.gain);
  j["lurValue"] = num12(w.lur_value);
  j["bound"] = num12(w.bound);
  j["violated"] = w.violated;
  j["observablesA"] = observables_json(w.rotated_a);
  j["observablesB"] = observables_json(w.rotated_b);
  return j;
}

}  // namespace

Report run_analysis(const AnalysisConfig& config) {
  if (config.criteria.empty() || config.directions.empty()) {
    throw Error("analysis needs at least one criterion and one direction");
  }
  Report report;
  report.version = kVersion;
  report.input = config.echo;

  if (std::holds_alternative<GaussianCM>(config.input)) {
    const auto& cm = std::get<GaussianCM>(config.input);
    for (Criterion c : config.criteria) {
      if (c != Criterion::Gaussian) {
        throw Error("criterion '" + criterion_name(c) +
                    "' does not apply to a Gaussian covariance-matrix input");
      }
      for (Direction d : config.directions) {
        report.verdicts.push_back(prop3(cm, d));
      }
    }
    return report;
  }

  const BipartiteState state = std::holds_alternative<FamilySpec>(config.input)
                                   ? family_state(std::get<FamilySpec>(config.input))
                                   : std::get<BipartiteState>(config.input);
  const ObservableSet loo_a = gell_mann_loos(state.dim_a);
  const ObservableSet loo_b = gell_mann_loos(state.dim_b);
  const CovarianceBlocks blocks = bipartite_blocks(state, loo_a, loo_b);
  const double purity_a = purity(partial_trace(state, Party::A));
  const double purity_b = purity(partial_trace(state, Party::B));

  for (Criterion c : config.criteria) {
    for (Direction d : config.directions) {
      switch (c) {
        case Criterion::Prop1:
          report.verdicts.push_back(
              prop1(blocks, state.dim_a, state.dim_b, purity_a, purity_b, d));
          break;
        case Criterion::Prop2:
          report.verdicts.push_back(
              prop2(blocks, d == Direction::AtoB ? purity_b : purity_a, d));
          break;
        case Criterion::LurWitness: {
          WitnessReport w = extract_witness(blocks, loo_a, loo_b, d);
          report.verdicts.push_back(witness_verdict(w));
          report.witnesses.push_back(std::move(w));
          break;
        }
        case Criterion::Gaussian:
          throw Error("criterion 'gaussian' requires a Gaussian covariance-matrix input");
      }
    }
  }
  return report;
}

Report run_scan(const ScanRequest& request) {
  Report report;
  report.version = kVersion;
  report.input.kind = "scan";
  report.input.family = family_name(request.family);

  const double threshold = threshold_scan(request.family, request.criterion, request.direction,
                                          request.lo, request.hi, request.tol);
  const BipartiteState probe = family_state(request.family, request.lo);
  report.input.dim_a = probe.dim_a;
  report.input.dim_b = probe.dim_b;
  report.threshold = ThresholdResult{family_name(request.family),
                                     scan_criterion_name(request.criterion),
                                     direction_name(request.direction),
                                     request.lo,
                                     request.hi,
                                     request.tol,
                                     threshold};
  return report;
}

std::string to_json_string(const Report& report) {
  Json j;
  j["version"] = report.version;
  j["input"] = input_json(report.input);
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) {
    verdicts.push_back(verdict_json(v));
  }
  j["verdicts"] = std::move(verdicts);
  if (!report.witnesses.empty()) {
    Json witnesses = Json::array();
    for (const auto& w : report.witnesses) {
      witnesses.push_back(witness_json(w));
    }
    j["witness"] = std::move(witnesses);
  }
  if (report.threshold) {
    const auto& t = *report.threshold;
    j["threshold"] = Json{{"family", t.family}, {"criterion", t.criterion},
                          {"direction", t.direction}, {"lo", num12(t.lo)},
                          {"hi", num12(t.hi)},       {"tol", num12(t.tol)},
                          {"threshold", num12(t.threshold)}};
  }
  return j.dump(2) + "\n";
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << "qsteer " << report.version << "\n";
  const auto& in = report.input;
  out << "input: " << in.kind;
  if (in.kind == "family") {
    out << " " << in.family << ", parameter " << fmt12(in.parameter);
  } else if (!in.family.empty()) {
    out << " " << in.family;
  }
  if (!in.path.empty()) {
    out << " " << in.path;
  }
  if (in.dim_a > 0) {
    out << " (" << in.dim_a << " x " << in.dim_b << ")";
  }
  if (in.modes_a > 0) {
    out << " (" << in.modes_a << " + " << in.modes_b << " modes)";
  }
  out << "\n";

  if (!report.verdicts.empty()) {
    out << "criterion     direction  lhs                rhs                margin             verdict\n";
    for (const auto& v : report.verdicts) {
      char line[160];
      std::snprintf(line, sizeof line, "%-13s %-10s %-18.12g %-18.12g %-18.12g %s\n",
                    criterion_name(v.criterion).c_str(), direction_arrow(v.direction).c_str(),
                    v.lhs, v.rhs, v.margin, v.violated ? "VIOLATED (steerable)" : "ok");
      out << line;
    }
  }
  for (const auto& w : report.witnesses) {
    out << "witness " << direction_arrow(w.direction) << ": gain " << fmt12(w.gain)
        << ", uncertainty sum " << fmt12(w.lur_value) << " vs bound " << fmt12(w.bound)
        << (w.violated ? "  => VIOLATED (steerable)" : "  => ok") << "\n";
  }
  if (report.threshold) {
    const auto& t = *report.threshold;
    out << "threshold " << t.family << " " << t.criterion << " " << t.direction << " in ["
        << fmt12(t.lo) << ", " << fmt12(t.hi) << "]: " << fmt12(t.threshold) << "\n";
  }
  return out.str();
}

}  // namespace qsteer
