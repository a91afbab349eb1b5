#pragma once

#include <string>

#include "qsteer/families.hpp"
#include "qsteer/steering.hpp"

namespace qsteer {

/// Criterion whose margin drives a threshold scan. MinProp12 locates the
/// smaller of the prop1/prop2 thresholds (margin = max of the two margins).
enum class ScanCriterion { Prop1, Prop2, Witness, MinProp12 };

std::string scan_criterion_name(ScanCriterion c);
ScanCriterion scan_criterion_from_name(const std::string& name);

/// Signed violation margin of the scan criterion for one family member.
double family_margin(Family family, double parameter, ScanCriterion criterion,
                     Direction direction);

/// Smallest parameter in [lo, hi] at which the criterion reports violation,
/// located by bisection on the margin sign to absolute tolerance `tol`.
/// When the endpoints do not straddle a sign change, falls back to a 1e-3
/// grid scan to find a bracket. Throws NoViolationInRangeError when the grid
/// finds no violating parameter.
double threshold_scan(Family family, ScanCriterion criterion, Direction direction, double lo,
                      double hi, double tol = 1e-6);

}  // namespace qsteer
