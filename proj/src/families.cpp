#include "qsteer/families.hpp"

#include <cmath>

namespace qsteer {
namespace {

// |a b> in A-major ordering.
ComplexVector product_ket(int dim_a, int dim_b, int a, int b) {
  ComplexVector v = ComplexVector::Zero(dim_a * dim_b);
  v(a * dim_b + b) = 1.0;
  return v;
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

void check_parameter(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error("family parameter " + std::to_string(p) + " outside [0, 1]");
  }
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::NoisySinglet: return "noisy-singlet";
    case Family::IsotropicQutritF: return "isotropic-qutrit-F";
    case Family::Werner2: return "werner-2";
    case Family::TwoQutritFprime: return "two-qutrit-Fprime";
    case Family::Explicit: return "explicit";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "noisy-singlet") return Family::NoisySinglet;
  if (name == "isotropic-qutrit-F") return Family::IsotropicQutritF;
  if (name == "werner-2") return Family::Werner2;
  if (name == "two-qutrit-Fprime") return Family::TwoQutritFprime;
  if (name == "explicit") return Family::Explicit;
  throw ParseError("unknown family '" + name + "'");
}

BipartiteState family_state(const FamilySpec& spec) {
  const double p = spec.parameter;
  switch (spec.family) {
    case Family::NoisySinglet: {
      check_parameter(p);
      ComplexVector psi_minus =
          (product_ket(2, 2, 0, 1) - product_ket(2, 2, 1, 0)) / std::sqrt(2.0);
      ComplexMatrix noise = (2.0 / 3.0) * projector(product_ket(2, 2, 0, 0)) +
                            (1.0 / 3.0) * projector(product_ket(2, 2, 0, 1));
      return make_bipartite(2, 2, p * projector(psi_minus) + (1.0 - p) * noise);
    }
    case Family::Werner2: {
      check_parameter(p);
      ComplexVector psi_minus =
          (product_ket(2, 2, 0, 1) - product_ket(2, 2, 1, 0)) / std::sqrt(2.0);
      return make_bipartite(
          2, 2, p * projector(psi_minus) + (1.0 - p) / 4.0 * ComplexMatrix::Identity(4, 4));
    }
    case Family::IsotropicQutritF: {
      check_parameter(p);
      ComplexVector phi_plus = (product_ket(3, 3, 0, 0) + product_ket(3, 3, 1, 1) +
                                product_ket(3, 3, 2, 2)) /
                               std::sqrt(3.0);
      ComplexMatrix noise = projector(product_ket(3, 3, 0, 1)) +
                            projector(product_ket(3, 3, 1, 2)) +
                            projector(product_ket(3, 3, 2, 0));
      return make_bipartite(3, 3, p * projector(phi_plus) + (1.0 - p) / 3.0 * noise);
    }
    case Family::TwoQutritFprime: {
      check_parameter(p);
      ComplexVector phi_plus = (product_ket(3, 3, 0, 0) + product_ket(3, 3, 1, 1) +
                                product_ket(3, 3, 2, 2)) /
                               std::sqrt(3.0);
      ComplexMatrix rho1 = (projector(product_ket(3, 3, 0, 1)) +
                            projector(product_ket(3, 3, 1, 2)) +
                            projector(product_ket(3, 3, 2, 0))) /
                           3.0;
      ComplexMatrix rho2 = (projector(product_ket(3, 3, 0, 2)) +
                            projector(product_ket(3, 3, 1, 0)) +
                            projector(product_ket(3, 3, 2, 1))) /
                           3.0;
      return make_bipartite(3, 3, p * projector(phi_plus) + (1.0 - p) / 2.0 * (rho1 + rho2));
    }
    case Family::Explicit: {
      if (!spec.explicit_state) {
        throw Error("explicit family requires a state payload");
      }
      return *spec.explicit_state;
    }
  }
  throw Error("unreachable family branch");
}

}  // namespace qsteer
