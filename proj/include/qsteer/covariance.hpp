#pragma once

#include "qsteer/density_matrix.hpp"
#include "qsteer/loo.hpp"

namespace qsteer {

/// Symmetrized covariance matrix of an observable set over a state:
/// gamma_ij = <(O_i O_j + O_j O_i)/2> - <O_i><O_j>.
RealMatrix covariance_matrix(const DensityMatrix& rho, const ObservableSet& set);

/// Block decomposition of the bipartite covariance matrix over the joint
/// observable list {A_k x 1, 1 x B_l}:
///   gamma = [[A, C], [C^T, B]],  C_kl = <A_k x B_l> - <A_k><B_l>.
struct CovarianceBlocks {
  RealMatrix a;       // covariance of the LOO set on the reduced state rho_A
  RealMatrix b;       // same for rho_B
  RealMatrix c;       // cross-correlation block, dimA^2 x dimB^2
  RealVector mean_a;  // LOO expectations on rho_A
  RealVector mean_b;
};

CovarianceBlocks bipartite_blocks(const BipartiteState& state, const ObservableSet& loo_a,
                                  const ObservableSet& loo_b);

/// Assembles [[A, C], [C^T, B]].
RealMatrix assemble_gamma(const CovarianceBlocks& blocks);

/// Checks that every null vector of `local` (relative singular-value cutoff)
/// is annihilated by `cross_t`. Holds automatically when gamma >= 0.
bool kernel_contained(const RealMatrix& local, const RealMatrix& cross_t);

}  // namespace qsteer
