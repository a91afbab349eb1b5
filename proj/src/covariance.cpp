#include "qsteer/covariance.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qsteer {

RealMatrix covariance_matrix(const DensityMatrix& rho, const ObservableSet& set) {
  if (set.dim() != rho.dim()) {
    throw DimensionMismatchError("observable set dimension does not match state");
  }
  const int n = set.size();
  RealVector means(n);
  for (int k = 0; k < n; ++k) {
    means(k) = expectation(rho, set[k]);
  }
  RealMatrix gamma(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const ComplexMatrix sym_prod = 0.5 * (set[i] * set[j] + set[j] * set[i]);
      const double second = expectation(rho, sym_prod);
      gamma(i, j) = gamma(j, i) = second - means(i) * means(j);
    }
  }
  return gamma;
}

CovarianceBlocks bipartite_blocks(const BipartiteState& state, const ObservableSet& loo_a,
                                  const ObservableSet& loo_b) {
  if (loo_a.dim() != state.dim_a || loo_b.dim() != state.dim_b) {
    throw DimensionMismatchError("LOO set dimensions do not match the state split");
  }
  const DensityMatrix rho_a = partial_trace(state, Party::A);
  const DensityMatrix rho_b = partial_trace(state, Party::B);

  CovarianceBlocks blocks;
  blocks.a = covariance_matrix(rho_a, loo_a);
  blocks.b = covariance_matrix(rho_b, loo_b);

  const int na = loo_a.size();
  const int nb = loo_b.size();
  blocks.mean_a.resize(na);
  blocks.mean_b.resize(nb);
  for (int k = 0; k < na; ++k) {
    blocks.mean_a(k) = expectation(rho_a, loo_a[k]);
  }
  for (int l = 0; l < nb; ++l) {
    blocks.mean_b(l) = expectation(rho_b, loo_b[l]);
  }
  blocks.c.resize(na, nb);
  for (int k = 0; k < na; ++k) {
    for (int l = 0; l < nb; ++l) {
      const double joint = expectation(state.joint, tensor(loo_a[k], loo_b[l]));
      blocks.c(k, l) = joint - blocks.mean_a(k) * blocks.mean_b(l);
    }
  }
  return blocks;
}

RealMatrix assemble_gamma(const CovarianceBlocks& blocks) {
  const Eigen::Index na = blocks.a.rows();
  const Eigen::Index nb = blocks.b.rows();
  RealMatrix gamma(na + nb, na + nb);
  gamma.topLeftCorner(na, na) = blocks.a;
  gamma.topRightCorner(na, nb) = blocks.c;
  gamma.bottomLeftCorner(nb, na) = blocks.c.transpose();
  gamma.bottomRightCorner(nb, nb) = blocks.b;
  return gamma;
}

bool kernel_contained(const RealMatrix& local, const RealMatrix& cross_t) {
  Eigen::JacobiSVD<RealMatrix> svd(local, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = (sv.size() > 0 ? sv(0) : 0.0) * tol::kPinvCutoff;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) < cutoff || sv(k) == 0.0) {
      const RealVector null_vec = svd.matrixV().col(k);
      if ((cross_t * null_vec).norm() > tol::kKernel) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace qsteer
