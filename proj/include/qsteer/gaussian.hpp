#pragma once

#include <iosfwd>
#include <string>

#include "qsteer/steering.hpp"

namespace qsteer {

/// Covariance matrix of an (M+N)-mode Gaussian state over quadratures
/// ordered (x_A1, p_A1, ..., x_AM, p_AM, x_B1, p_B1, ..., p_BN), in the
/// convention where the vacuum variance is 1/2.
struct GaussianCM {
  int modes_a;
  int modes_b;
  RealMatrix gamma;  // 2(M+N) x 2(M+N), symmetric, gamma + i Omega >= 0
};

/// Validates symmetry and physicality (gamma + i Omega_AB >= -tol).
GaussianCM make_gaussian_cm(int modes_a, int modes_b, const RealMatrix& gamma);

/// Block-diagonal symplectic form, (1/2) [[0, 1], [-1, 0]] per mode.
RealMatrix symplectic_form(int n_modes);

/// Gaussian steering criterion: nonsteerable A->B requires
/// gamma >= 0_A (+) i Omega_B. lhs is -(min eigenvalue) of the Hermitian
/// matrix gamma - (0_A (+) i Omega_B); violation means min eigenvalue < -tol.
SteeringVerdict prop3(const GaussianCM& cm, Direction direction);

/// JSON document {"modesA": M, "modesB": N, "gamma": [[...]]}.
GaussianCM read_gaussian_cm(std::istream& in);
GaussianCM read_gaussian_cm_file(const std::string& path);
void write_gaussian_cm(std::ostream& out, const GaussianCM& cm);

}  // namespace qsteer
