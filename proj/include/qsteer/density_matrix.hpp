#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qsteer/errors.hpp"

namespace qsteer {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace tol {
inline constexpr double kHermitian = 1e-9;
inline constexpr double kUnitTrace = 1e-9;
inline constexpr double kPositive = 1e-9;
inline constexpr double kOrthonormal = 1e-9;
inline constexpr double kCompleteness = 1e-8;
inline constexpr double kImagExpectation = 1e-8;
inline constexpr double kDecision = 1e-9;
inline constexpr double kPinvCutoff = 1e-10;  // relative to largest singular value
inline constexpr double kKernel = 1e-7;
inline constexpr double kGammaPsd = 1e-8;
inline constexpr double kCvPhysical = 1e-8;
}  // namespace tol

enum class Party { A, B };

/// A validated density matrix: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& matrix() const { return mat_; }

  friend DensityMatrix make_density(const ComplexMatrix& entries);

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  ComplexMatrix mat_;
};

/// Validates `entries` as a density matrix. Hermiticity is checked on the
/// raw input; the matrix is then symmetrized as (M + M^dagger)/2 so the
/// trace and eigenvalue tests do not trip on rounding noise.
DensityMatrix make_density(const ComplexMatrix& entries);

struct BipartiteState {
  int dim_a;
  int dim_b;
  DensityMatrix joint;  // tensor ordering A-major: index = a * dim_b + b
};

/// Builds a bipartite state, validating the joint matrix and the dimension split.
BipartiteState make_bipartite(int dim_a, int dim_b, const ComplexMatrix& joint);

/// Reduced density matrix of the kept party.
DensityMatrix partial_trace(const BipartiteState& state, Party keep);

/// Tr(rho^2), in [1/dim, 1].
double purity(const DensityMatrix& rho);

/// Kronecker product with A-major ordering, matching BipartiteState.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qsteer
