#include "qsteer/scan.hpp"

#include <algorithm>
#include <cmath>

namespace qsteer {

std::string scan_criterion_name(ScanCriterion c) {
  switch (c) {
    case ScanCriterion::Prop1: return "prop1";
    case ScanCriterion::Prop2: return "prop2";
    case ScanCriterion::Witness: return "witness";
    case ScanCriterion::MinProp12: return "min";
  }
  return "?";
}

ScanCriterion scan_criterion_from_name(const std::string& name) {
  if (name == "prop1") return ScanCriterion::Prop1;
  if (name == "prop2") return ScanCriterion::Prop2;
  if (name == "witness") return ScanCriterion::Witness;
  if (name == "min") return ScanCriterion::MinProp12;
  throw ParseError("unknown scan criterion '" + name + "'");
}

double family_margin(Family family, double parameter, ScanCriterion criterion,
                     Direction direction) {
  const BipartiteState state = family_state(family, parameter);
  const ObservableSet loo_a = gell_mann_loos(state.dim_a);
  const ObservableSet loo_b = gell_mann_loos(state.dim_b);
  const CovarianceBlocks blocks = bipartite_blocks(state, loo_a, loo_b);
  const double purity_a = purity(partial_trace(state, Party::A));
  const double purity_b = purity(partial_trace(state, Party::B));

  switch (criterion) {
    case ScanCriterion::Prop1:
      return prop1(blocks, state.dim_a, state.dim_b, purity_a, purity_b, direction).margin;
    case ScanCriterion::Prop2:
      return prop2(blocks, direction == Direction::AtoB ? purity_b : purity_a, direction)
          .margin;
    case ScanCriterion::Witness:
      return witness_verdict(extract_witness(blocks, loo_a, loo_b, direction)).margin;
    case ScanCriterion::MinProp12: {
      const double m1 =
          prop1(blocks, state.dim_a, state.dim_b, purity_a, purity_b, direction).margin;
      const double m2 =
          prop2(blocks, direction == Direction::AtoB ? purity_b : purity_a, direction).margin;
      return std::max(m1, m2);
    }
  }
  throw Error("unreachable scan criterion");
}

namespace {

double bisect(Family family, ScanCriterion criterion, Direction direction, double lo, double hi,
              double tol) {
  // invariant: margin(lo) <= 0 < margin(hi)
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (family_margin(family, mid, criterion, direction) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double threshold_scan(Family family, ScanCriterion criterion, Direction direction, double lo,
                      double hi, double tol) {
  if (family == Family::Explicit) {
    throw Error("threshold scan requires a one-parameter family");
  }
  if (!(lo < hi)) {
    throw Error("scan range must satisfy lo < hi");
  }
  if (!(tol > 0.0)) {
    throw Error("scan tolerance must be positive");
  }
  if (family_margin(family, lo, criterion, direction) > 0.0) {
    return lo;  // already violated at the lower end
  }
  if (family_margin(family, hi, criterion, direction) > 0.0) {
    return bisect(family, criterion, direction, lo, hi, tol);
  }
  // Endpoints do not straddle: locate a bracket on a fixed grid.
  const double step = 1e-3 * (hi - lo);
  double prev = lo;
  for (double x = lo + step; x < hi + 0.5 * step; x += step) {
    const double clamped = std::min(x, hi);
    if (family_margin(family, clamped, criterion, direction) > 0.0) {
      return bisect(family, criterion, direction, prev, clamped, tol);
    }
    prev = clamped;
  }
  throw NoViolationInRangeError(family_name(family) + " " + scan_criterion_name(criterion) +
                                " " + direction_name(direction) + " in [" + std::to_string(lo) +
                                ", " + std::to_string(hi) + "]");
}

}  // namespace qsteer
