#include "qsteer/density_matrix.hpp"

#include <Eigen/Eigenvalues>

namespace qsteer {

DensityMatrix make_density(const ComplexMatrix& entries) {
  if (entries.rows() != entries.cols() || entries.rows() < 1) {
    throw DimensionMismatchError("density matrix must be square and non-empty");
  }
  const double herm_dev = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol::kHermitian) {
    throw NonHermitianError(herm_dev);
  }
  ComplexMatrix sym = 0.5 * (entries + entries.adjoint());

  const double trace_dev = std::abs(sym.trace() - Complex(1.0, 0.0));
  if (trace_dev > tol::kUnitTrace) {
    throw NonUnitTraceError(trace_dev);
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol::kPositive) {
    throw NotPositiveError(min_eig);
  }
  return DensityMatrix(std::move(sym));
}

BipartiteState make_bipartite(int dim_a, int dim_b, const ComplexMatrix& joint) {
  if (dim_a < 1 || dim_b < 1) {
    throw DimensionMismatchError("local dimensions must be positive");
  }
  if (joint.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw DimensionMismatchError("joint dimension " + std::to_string(joint.rows()) +
                                 " != dimA * dimB = " + std::to_string(dim_a * dim_b));
  }
  return BipartiteState{dim_a, dim_b, make_density(joint)};
}

DensityMatrix partial_trace(const BipartiteState& state, Party keep) {
  const int da = state.dim_a;
  const int db = state.dim_b;
  const ComplexMatrix& rho = state.joint.matrix();
  if (keep == Party::A) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (int a = 0; a < da; ++a) {
      for (int ap = 0; ap < da; ++ap) {
        Complex sum = 0.0;
        for (int b = 0; b < db; ++b) {
          sum += rho(a * db + b, ap * db + b);
        }
        out(a, ap) = sum;
      }
    }
    return make_density(out);
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int b = 0; b < db; ++b) {
    for (int bp = 0; bp < db; ++bp) {
      Complex sum = 0.0;
      for (int a = 0; a < da; ++a) {
        sum += rho(a * db + b, a * db + bp);
      }
      out(b, bp) = sum;
    }
  }
  return make_density(out);
}

double purity(const DensityMatrix& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace qsteer
