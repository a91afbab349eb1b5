#include "qsteer/gaussian.hpp"

#include <Eigen/Eigenvalues>
#include <fstream>
#include <json.hpp>

namespace qsteer {
namespace {

ComplexMatrix i_omega_embedded(int modes_a, int modes_b, Direction direction) {
  const int total = 2 * (modes_a + modes_b);
  ComplexMatrix out = ComplexMatrix::Zero(total, total);
  const bool a_to_b = direction == Direction::AtoB;
  const int offset = a_to_b ? 2 * modes_a : 0;
  const RealMatrix omega = symplectic_form(a_to_b ? modes_b : modes_a);
  out.block(offset, offset, omega.rows(), omega.cols()) =
      Complex(0.0, 1.0) * omega.cast<Complex>();
  return out;
}

double min_hermitian_eigenvalue(const ComplexMatrix& h) {
  // the solver reads a single triangle, so a non-Hermitian input would pass silently
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw Error("internal: expected a Hermitian matrix");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

RealMatrix symplectic_form(int n_modes) {
  if (n_modes < 1) {
    throw DimensionMismatchError("symplectic form needs at least one mode");
  }
  RealMatrix omega = RealMatrix::Zero(2 * n_modes, 2 * n_modes);
  for (int i = 0; i < n_modes; ++i) {
    omega(2 * i, 2 * i + 1) = 0.5;
    omega(2 * i + 1, 2 * i) = -0.5;
  }
  return omega;
}

GaussianCM make_gaussian_cm(int modes_a, int modes_b, const RealMatrix& gamma) {
  if (modes_a < 1 || modes_b < 1) {
    throw DimensionMismatchError("mode counts must be positive");
  }
  const int total = 2 * (modes_a + modes_b);
  if (gamma.rows() != total || gamma.cols() != total) {
    throw DimensionMismatchError("gamma must be " + std::to_string(total) + " x " +
                                 std::to_string(total));
  }
  const double sym_dev = (gamma - gamma.transpose()).cwiseAbs().maxCoeff();
  if (sym_dev > tol::kHermitian) {
    throw UnphysicalError("gamma not symmetric: max |gamma - gamma^T| = " +
                          std::to_string(sym_dev));
  }
  const ComplexMatrix check = gamma.cast<Complex>() + Complex(0.0, 1.0) *
                                  symplectic_form(modes_a + modes_b).cast<Complex>();
  const double min_eig = min_hermitian_eigenvalue(check);
  if (min_eig < -tol::kCvPhysical) {
    throw UnphysicalError("gamma + i Omega has min eigenvalue " + std::to_string(min_eig));
  }
  return GaussianCM{modes_a, modes_b, gamma};
}

SteeringVerdict prop3(const GaussianCM& cm, Direction direction) {
  const ComplexMatrix h =
      cm.gamma.cast<Complex>() - i_omega_embedded(cm.modes_a, cm.modes_b, direction);
  const double min_eig = min_hermitian_eigenvalue(h);
  const double lhs = -min_eig;
  const double rhs = tol::kDecision;
  const double margin = lhs - rhs;
  return SteeringVerdict{Criterion::Gaussian, direction, lhs, rhs, margin > 0.0, margin};
}

GaussianCM read_gaussian_cm(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("modesA") || !doc.contains("modesB") ||
      !doc.contains("gamma")) {
    throw ParseError("gaussian CM document needs modesA, modesB, gamma");
  }
  int modes_a = 0;
  int modes_b = 0;
  RealMatrix gamma;
  try {
    modes_a = doc.at("modesA").get<int>();
    modes_b = doc.at("modesB").get<int>();
    const auto& rows = doc.at("gamma");
    if (!rows.is_array() || rows.empty()) {
      throw ParseError("gamma must be a non-empty array of rows");
    }
    gamma.resize(static_cast<Eigen::Index>(rows.size()),
                 static_cast<Eigen::Index>(rows.at(0).size()));
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows.at(i);
      if (!row.is_array() || row.size() != rows.size()) {
        throw ParseError("gamma must be square");
      }
      for (size_t j = 0; j < row.size(); ++j) {
        gamma(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            row.at(j).get<double>();
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return make_gaussian_cm(modes_a, modes_b, gamma);
}

GaussianCM read_gaussian_cm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  return read_gaussian_cm(in);
}

void write_gaussian_cm(std::ostream& out, const GaussianCM& cm) {
  nlohmann::ordered_json doc;
  doc["modesA"] = cm.modes_a;
  doc["modesB"] = cm.modes_b;
  auto rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < cm.gamma.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < cm.gamma.cols(); ++j) {
      row.push_back(cm.gamma(i, j));
    }
    rows.push_back(std::move(row));
  }
  doc["gamma"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace qsteer
