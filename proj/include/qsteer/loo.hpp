#pragma once

#include <vector>

#include "qsteer/density_matrix.hpp"

namespace qsteer {

/// An ordered set of dim^2 Hermitian observables, orthonormal under the
/// Hilbert-Schmidt inner product Tr(O_k O_l) = delta_kl and complete:
/// sum_k O_k^2 = dim * I.
class ObservableSet {
 public:
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(obs_.size()); }
  const std::vector<ComplexMatrix>& observables() const { return obs_; }
  const ComplexMatrix& operator[](int k) const { return obs_[static_cast<size_t>(k)]; }

  friend ObservableSet make_observable_set(int dim, std::vector<ComplexMatrix> observables);

 private:
  ObservableSet(int dim, std::vector<ComplexMatrix> obs) : dim_(dim), obs_(std::move(obs)) {}
  int dim_;
  std::vector<ComplexMatrix> obs_;
};

/// Validates the LOO invariants (Hermiticity, HS orthonormality, completeness).
ObservableSet make_observable_set(int dim, std::vector<ComplexMatrix> observables);

/// Canonical basis for dimension d, in deterministic order:
/// the d projectors |j><j|, then (|j><k| + |k><j|)/sqrt2 for j<k,
/// then (-i|j><k| + i|k><j|)/sqrt2 for j<k.
ObservableSet gell_mann_loos(int d);

/// New set with observables O~_l = sum_k R(l,k) O_k. R must be orthogonal.
ObservableSet rotate_loos(const ObservableSet& set, const RealMatrix& rotation);

/// Tr(rho O) for Hermitian O; throws if the imaginary residue exceeds tolerance.
double expectation(const DensityMatrix& rho, const ComplexMatrix& observable);

}  // namespace qsteer
