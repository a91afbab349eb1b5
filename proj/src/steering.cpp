#include "qsteer/steering.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace qsteer {
namespace {

double trace_norm(const RealMatrix& m) {
  Eigen::JacobiSVD<RealMatrix> svd(m);
  return svd.singularValues().sum();
}

RealMatrix pseudo_inverse(const RealMatrix& m) {
  Eigen::JacobiSVD<RealMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cutoff = (sv.size() > 0 ? sv(0) : 0.0) * tol::kPinvCutoff;
  RealVector inv = RealVector::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff && sv(i) > 0.0) {
      inv(i) = 1.0 / sv(i);
    }
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

SteeringVerdict exceedance_verdict(Criterion c, Direction dir, double lhs, double rhs) {
  const double margin = lhs - rhs;
  return SteeringVerdict{c, dir, lhs, rhs, margin > tol::kDecision, margin};
}

}  // namespace

std::string direction_name(Direction d) { return d == Direction::AtoB ? "ab" : "ba"; }

std::string direction_arrow(Direction d) { return d == Direction::AtoB ? "A->B" : "B->A"; }

Direction direction_from_name(const std::string& name) {
  if (name == "ab") return Direction::AtoB;
  if (name == "ba") return Direction::BtoA;
  throw ParseError("unknown direction '" + name + "' (expected ab or ba)");
}

std::string criterion_name(Criterion c) {
  switch (c) {
    case Criterion::Prop1: return "prop1";
    case Criterion::Prop2: return "prop2";
    case Criterion::LurWitness: return "lur-witness";
    case Criterion::Gaussian: return "gaussian";
  }
  return "?";
}

SteeringVerdict prop1(const CovarianceBlocks& blocks, int dim_a, int dim_b, double purity_a,
                      double purity_b, Direction direction) {
  const double lhs = trace_norm(blocks.c);
  const double rhs =
      direction == Direction::AtoB
          ? std::sqrt((dim_a - purity_a) * (1.0 - purity_b))
          : std::sqrt((dim_b - purity_b) * (1.0 - purity_a));
  return exceedance_verdict(Criterion::Prop1, direction, lhs, rhs);
}

SteeringVerdict prop2(const CovarianceBlocks& blocks, double purity_steered,
                      Direction direction) {
  double lhs = 0.0;
  if (direction == Direction::AtoB) {
    if (!kernel_contained(blocks.a, blocks.c.transpose())) {
      throw MalformedBlocksError("null vector of A block not annihilated by C^T");
    }
    lhs = (blocks.c.transpose() * pseudo_inverse(blocks.a) * blocks.c).trace();
  } else {
    if (!kernel_contained(blocks.b, blocks.c)) {
      throw MalformedBlocksError("null vector of B block not annihilated by C");
    }
    lhs = (blocks.c * pseudo_inverse(blocks.b) * blocks.c.transpose()).trace();
  }
  const double rhs = 1.0 - purity_steered;
  return exceedance_verdict(Criterion::Prop2, direction, lhs, rhs);
}

double lur_bound_loos(int d) {
  if (d < 2) {
    throw DimensionMismatchError("lur_bound_loos requires d >= 2");
  }
  return static_cast<double>(d) - 1.0;
}

SteeringVerdict lur_test(const BipartiteState& state, const std::vector<ComplexMatrix>& set_a,
                         const std::vector<ComplexMatrix>& set_b, const std::vector<double>& gains,
                         Direction direction) {
  const bool a_to_b = direction == Direction::AtoB;
  const int steered_dim = a_to_b ? state.dim_b : state.dim_a;
  const auto& steered_set = a_to_b ? set_b : set_a;
  const auto& steerer_set = a_to_b ? set_a : set_b;

  // The bound d-1 is only valid when the steered party measures a full LOO set.
  try {
    make_observable_set(steered_dim, steered_set);
  } catch (const Error& e) {
    throw PartialBobSetError("steered party's observables are not a complete LOO set (" +
                             std::string(e.what()) + ")");
  }
  if (gains.size() != steerer_set.size()) {
    throw DimensionMismatchError("gains size " + std::to_string(gains.size()) +
                                 " != steering set size " + std::to_string(steerer_set.size()));
  }
  for (const auto& o : steerer_set) {
    const int d = a_to_b ? state.dim_a : state.dim_b;
    if (o.rows() != d || o.cols() != d) {
      throw DimensionMismatchError("steering observable size does not match its party");
    }
    const double dev = (o - o.adjoint()).cwiseAbs().maxCoeff();
    if (dev > tol::kHermitian) {
      throw NonHermitianError(dev);
    }
  }

  const DensityMatrix rho_a = partial_trace(state, Party::A);
  const DensityMatrix rho_b = partial_trace(state, Party::B);
  const size_t pairs = std::max(steerer_set.size(), steered_set.size());
  double lhs = 0.0;
  for (size_t k = 0; k < pairs; ++k) {
    // Zero-padding: missing observables contribute no variance or correlation.
    const bool has_steerer = k < steerer_set.size();
    const bool has_steered = k < steered_set.size();
    const double g = has_steerer ? gains[k] : 0.0;

    double var_steerer = 0.0;
    double var_steered = 0.0;
    double corr = 0.0;
    if (has_steerer) {
      const DensityMatrix& rho_s = a_to_b ? rho_a : rho_b;
      const double m = expectation(rho_s, steerer_set[k]);
      var_steerer = expectation(rho_s, steerer_set[k] * steerer_set[k]) - m * m;
    }
    if (has_steered) {
      const DensityMatrix& rho_s = a_to_b ? rho_b : rho_a;
      const double m = expectation(rho_s, steered_set[k]);
      var_steered = expectation(rho_s, steered_set[k] * steered_set[k]) - m * m;
    }
    if (has_steerer && has_steered) {
      const ComplexMatrix& on_a = a_to_b ? steerer_set[k] : steered_set[k];
      const ComplexMatrix& on_b = a_to_b ? steered_set[k] : steerer_set[k];
      const double joint = expectation(state.joint, tensor(on_a, on_b));
      const double mean_a = expectation(rho_a, on_a);
      const double mean_b = expectation(rho_b, on_b);
      corr = joint - mean_a * mean_b;
    }
    lhs += g * g * var_steerer + var_steered + 2.0 * g * corr;
  }
  const double rhs = lur_bound_loos(steered_dim);
  const double margin = rhs - lhs;  // positive margin = uncertainty bound undercut
  return SteeringVerdict{Criterion::LurWitness, direction, lhs, rhs, margin > tol::kDecision,
                         margin};
}

WitnessReport extract_witness(const CovarianceBlocks& blocks, const ObservableSet& loo_a,
                              const ObservableSet& loo_b, Direction direction) {
  Eigen::JacobiSVD<RealMatrix> svd(blocks.c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double c_trace_norm = svd.singularValues().sum();

  // rotate_loos applies O~_l = sum_k R(l,k) O_k; we want A~_k = sum_i U(i,k) A_i.
  ObservableSet rotated_a = rotate_loos(loo_a, svd.matrixU().transpose());
  ObservableSet rotated_b = rotate_loos(loo_b, svd.matrixV().transpose());

  const double trace_a = blocks.a.trace();
  const double trace_b = blocks.b.trace();
  const bool a_to_b = direction == Direction::AtoB;
  const double steerer_trace = a_to_b ? trace_a : trace_b;
  const double steered_trace = a_to_b ? trace_b : trace_a;
  const int steered_dim = a_to_b ? loo_b.dim() : loo_a.dim();

  // Pure steering marginal implies a product state (C = 0); the gain is moot.
  const double gain = steerer_trace > 1e-12 ? -c_trace_norm / steerer_trace : 0.0;
  const double lur_value =
      gain * gain * steerer_trace + steered_trace + 2.0 * gain * c_trace_norm;
  const double bound = lur_bound_loos(steered_dim);
  return WitnessReport{direction, std::move(rotated_a), std::move(rotated_b),
                       gain,      lur_value,            bound,
                       lur_value < bound - tol::kDecision};
}

SteeringVerdict witness_verdict(const WitnessReport& report) {
  const double margin = report.bound - report.lur_value;
  return SteeringVerdict{Criterion::LurWitness, report.direction, report.lur_value,
                         report.bound, report.violated, margin};
}

}  // namespace qsteer
