#pragma once

#include <string>
#include <vector>

#include "qsteer/covariance.hpp"

namespace qsteer {

enum class Direction { AtoB, BtoA };

std::string direction_name(Direction d);          // "ab" / "ba"
std::string direction_arrow(Direction d);         // "A->B" / "B->A"
Direction direction_from_name(const std::string& name);

enum class Criterion { Prop1, Prop2, LurWitness, Gaussian };

std::string criterion_name(Criterion c);  // "prop1", "prop2", "lur-witness", "gaussian"

/// Outcome of one criterion evaluated in one steering direction. The margin
/// is signed so that margin > 0 always means "violation detected", i.e. the
/// state is steerable in that direction.
struct SteeringVerdict {
  Criterion criterion;
  Direction direction;
  double lhs;
  double rhs;
  bool violated;
  double margin;
};

/// Trace-norm criterion: a state nonsteerable A->B satisfies
/// ||C||_tr <= sqrt((d_A - Tr rho_A^2)(1 - Tr rho_B^2)); B->A swaps roles.
SteeringVerdict prop1(const CovarianceBlocks& blocks, int dim_a, int dim_b, double purity_a,
                      double purity_b, Direction direction);

/// Pseudoinverse criterion: nonsteerable A->B satisfies
/// Tr(C^T A^+ C) <= 1 - Tr(rho_B^2); B->A uses Tr(C B^+ C^T) <= 1 - Tr(rho_A^2).
/// `purity_steered` is the purity of the steered party's reduced state.
SteeringVerdict prop2(const CovarianceBlocks& blocks, double purity_steered,
                      Direction direction);

/// State-independent lower bound of the summed variances of a full LOO set: d - 1.
double lur_bound_loos(int d);

/// Uncertainty-sum steering test with per-pair gains on the steering party:
///   A->B:  sum_k delta^2(g_k A_k x 1 + 1 x B_k) >= d_B - 1.
/// The steered party's list must be a complete LOO set; the steering party's
/// list may be partial and is zero-padded for pairing. Violation means the
/// sum falls BELOW the bound, so the verdict margin is rhs - lhs.
SteeringVerdict lur_test(const BipartiteState& state, const std::vector<ComplexMatrix>& set_a,
                         const std::vector<ComplexMatrix>& set_b, const std::vector<double>& gains,
                         Direction direction);

/// Observable sets realizing an uncertainty-based violation, obtained from the
/// SVD C = U Lambda V^T (Lambda descending): A~_k = sum_i U(i,k) A_i,
/// B~_k = sum_i V(i,k) B_i, with the optimal uniform gain
/// g = -||C||_tr / Tr(local block of the steering party).
struct WitnessReport {
  Direction direction;
  ObservableSet rotated_a;
  ObservableSet rotated_b;
  double gain;
  double lur_value;  // g^2 Tr A + Tr B + 2 g ||C||_tr  (A->B form)
  double bound;      // d - 1 for the steered party
  bool violated;     // lur_value < bound - tolerance
};

WitnessReport extract_witness(const CovarianceBlocks& blocks, const ObservableSet& loo_a,
                              const ObservableSet& loo_b, Direction direction);

/// Verdict view of a witness report (criterion = LurWitness, margin = bound - lur_value).
SteeringVerdict witness_verdict(const WitnessReport& report);

}  // namespace qsteer
