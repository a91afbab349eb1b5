#include "qsteer/loo.hpp"

#include <cmath>

namespace qsteer {

ObservableSet make_observable_set(int dim, std::vector<ComplexMatrix> observables) {
  if (dim < 2) {
    throw DimensionMismatchError("observable set dimension must be >= 2");
  }
  const size_t expected = static_cast<size_t>(dim) * static_cast<size_t>(dim);
  if (observables.size() != expected) {
    throw DimensionMismatchError("LOO set for dim " + std::to_string(dim) + " needs " +
                                 std::to_string(expected) + " observables, got " +
                                 std::to_string(observables.size()));
  }
  for (const auto& o : observables) {
    if (o.rows() != dim || o.cols() != dim) {
      throw DimensionMismatchError("observable size does not match set dimension");
    }
    const double dev = (o - o.adjoint()).cwiseAbs().maxCoeff();
    if (dev > tol::kHermitian) {
      throw NonHermitianError(dev);
    }
  }
  for (size_t k = 0; k < observables.size(); ++k) {
    for (size_t l = k; l < observables.size(); ++l) {
      const Complex hs = (observables[k] * observables[l]).trace();
      const double target = (k == l) ? 1.0 : 0.0;
      if (std::abs(hs - target) > tol::kOrthonormal) {
        throw Error("LOO orthonormality violated at pair (" + std::to_string(k) + ", " +
                    std::to_string(l) + "): |Tr(O_k O_l) - delta| = " +
                    std::to_string(std::abs(hs - target)));
      }
    }
  }
  ComplexMatrix sum_sq = ComplexMatrix::Zero(dim, dim);
  for (const auto& o : observables) {
    sum_sq += o * o;
  }
  const double comp_dev =
      (sum_sq - static_cast<double>(dim) * ComplexMatrix::Identity(dim, dim))
          .cwiseAbs()
          .maxCoeff();
  if (comp_dev > tol::kCompleteness) {
    throw Error("LOO completeness violated: max |sum O_k^2 - d I| = " +
                std::to_string(comp_dev));
  }
  return ObservableSet(dim, std::move(observables));
}

ObservableSet gell_mann_loos(int d) {
  if (d < 2) {
    throw DimensionMismatchError("gell_mann_loos requires d >= 2");
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<ComplexMatrix> obs;
  obs.reserve(static_cast<size_t>(d) * d);
  for (int j = 0; j < d; ++j) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    m(j, j) = 1.0;
    obs.push_back(std::move(m));
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, k) = inv_sqrt2;
      m(k, j) = inv_sqrt2;
      obs.push_back(std::move(m));
    }
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, k) = Complex(0.0, -inv_sqrt2);
      m(k, j) = Complex(0.0, inv_sqrt2);
      obs.push_back(std::move(m));
    }
  }
  return make_observable_set(d, std::move(obs));
}

ObservableSet rotate_loos(const ObservableSet& set, const RealMatrix& rotation) {
  const int n = set.size();
  if (rotation.rows() != n || rotation.cols() != n) {
    throw DimensionMismatchError("rotation must be " + std::to_string(n) + " x " +
                                 std::to_string(n));
  }
  const double ortho_dev =
      (rotation * rotation.transpose() - RealMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (ortho_dev > tol::kOrthonormal) {
    throw NonOrthogonalRotationError(ortho_dev);
  }
  std::vector<ComplexMatrix> rotated;
  rotated.reserve(static_cast<size_t>(n));
  for (int l = 0; l < n; ++l) {
    ComplexMatrix m = ComplexMatrix::Zero(set.dim(), set.dim());
    for (int k = 0; k < n; ++k) {
      m += rotation(l, k) * set[k];
    }
    rotated.push_back(std::move(m));
  }
  return make_observable_set(set.dim(), std::move(rotated));
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& observable) {
  if (observable.rows() != rho.dim() || observable.cols() != rho.dim()) {
    throw DimensionMismatchError("observable dimension does not match state");
  }
  const Complex value = (rho.matrix() * observable).trace();
  if (std::abs(value.imag()) > tol::kImagExpectation) {
    throw ImaginaryExpectationError(std::abs(value.imag()));
  }
  return value.real();
}

}  // namespace qsteer
