#include <doctest.h>

#include <cmath>

#include "qsteer/steering.hpp"
#include "support/random_gen.hpp"

using namespace qsteer;

namespace {

// Rotation taking the canonical d=2 set {|0><0|, |1><1|, X/sqrt2, Y/sqrt2}
// to {I/sqrt2, X/sqrt2, Y/sqrt2, Z/sqrt2}.
RealMatrix pauli_rotation() {
  const double s = 1.0 / std::sqrt(2.0);
  RealMatrix r = RealMatrix::Zero(4, 4);
  r(0, 0) = s;
  r(0, 1) = s;
  r(1, 2) = 1.0;
  r(2, 3) = 1.0;
  r(3, 0) = s;
  r(3, 1) = -s;
  return r;
}

}  // namespace

TEST_CASE("canonical qubit set rotates onto the Pauli set") {
  auto pauli = rotate_loos(gell_mann_loos(2), pauli_rotation());
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix id = s * ComplexMatrix::Identity(2, 2);
  ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, s, s, 0;
  sy << 0, Complex(0, -s), Complex(0, s), 0;
  sz << s, 0, 0, -s;
  CHECK((pauli[0] - id).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((pauli[1] - sx).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((pauli[2] - sy).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((pauli[3] - sz).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("qubit set is exactly orthonormal") {
  auto set = gell_mann_loos(2);
  for (int k = 0; k < set.size(); ++k) {
    for (int l = 0; l < set.size(); ++l) {
      const double target = k == l ? 1.0 : 0.0;
      CHECK(std::abs((set[k] * set[l]).trace() - Complex(target)) < 1e-14);
    }
  }
}

TEST_CASE("qutrit set is complete") {
  auto set = gell_mann_loos(3);
  CHECK(set.size() == 9);
  ComplexMatrix sum = ComplexMatrix::Zero(3, 3);
  for (int k = 0; k < set.size(); ++k) {
    sum += set[k] * set[k];
  }
  CHECK((sum - 3.0 * ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("states expand in the LOO basis") {
  testing::Rng rng(3);
  for (int d : {2, 3, 4}) {
    auto set = gell_mann_loos(d);
    for (int trial = 0; trial < 8; ++trial) {
      auto rho = testing::random_density(d, rng);
      ComplexMatrix rebuilt = ComplexMatrix::Zero(d, d);
      for (int k = 0; k < set.size(); ++k) {
        rebuilt += expectation(rho, set[k]) * set[k];
      }
      CHECK((rebuilt - rho.matrix()).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("rotating by the identity and by permutations") {
  auto set = gell_mann_loos(2);
  auto same = rotate_loos(set, RealMatrix::Identity(4, 4));
  for (int k = 0; k < 4; ++k) {
    CHECK((same[k] - set[k]).cwiseAbs().maxCoeff() < 1e-14);
  }
  RealMatrix perm = RealMatrix::Zero(4, 4);
  perm(0, 3) = perm(1, 2) = perm(2, 1) = perm(3, 0) = 1.0;
  auto reversed = rotate_loos(set, perm);
  for (int k = 0; k < 4; ++k) {
    CHECK((reversed[k] - set[3 - k]).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("random orthogonal rotations preserve the LOO invariants") {
  testing::Rng rng(5);
  for (int d : {2, 3}) {
    auto set = gell_mann_loos(d);
    for (int trial = 0; trial < 10; ++trial) {
      auto rotated = rotate_loos(set, testing::random_orthogonal(d * d, rng));
      for (int k = 0; k < rotated.size(); ++k) {
        for (int l = k; l < rotated.size(); ++l) {
          const double target = k == l ? 1.0 : 0.0;
          CHECK(std::abs((rotated[k] * rotated[l]).trace() - Complex(target)) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("non-orthogonal rotation is rejected") {
  auto set = gell_mann_loos(2);
  RealMatrix bad = RealMatrix::Identity(4, 4);
  bad(0, 0) = 1.5;
  CHECK_THROWS_AS(rotate_loos(set, bad), NonOrthogonalRotationError);
}

TEST_CASE("gell_mann_loos rejects dimension below two") {
  CHECK_THROWS_AS(gell_mann_loos(1), DimensionMismatchError);
}

TEST_CASE("make_observable_set enforces the LOO invariants") {
  auto obs = gell_mann_loos(2).observables();
  obs.pop_back();
  CHECK_THROWS_AS(make_observable_set(2, obs), DimensionMismatchError);

  auto scaled = gell_mann_loos(2).observables();
  scaled[0] *= 2.0;  // breaks Tr(O_0 O_0) = 1
  CHECK_THROWS_AS(make_observable_set(2, scaled), Error);
}

TEST_CASE("expectation rejects observables with complex expectation values") {
  auto rho = make_density(0.5 * ComplexMatrix::Identity(2, 2));
  ComplexMatrix skew = Complex(0.0, 1.0) * ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(expectation(rho, skew), ImaginaryExpectationError);
}

TEST_CASE("expectation values") {
  ComplexMatrix ket0 = ComplexMatrix::Zero(2, 2);
  ket0(0, 0) = 1.0;
  auto rho0 = make_density(ket0);
  CHECK(expectation(rho0, ket0) == doctest::Approx(1.0));

  auto mixed = make_density(0.5 * ComplexMatrix::Identity(2, 2));
  ComplexMatrix sz(2, 2);
  sz << 1.0 / std::sqrt(2.0), 0, 0, -1.0 / std::sqrt(2.0);
  CHECK(expectation(mixed, sz) == doctest::Approx(0.0));

  for (int d : {2, 3}) {
    auto set = gell_mann_loos(d);
    auto max_mixed = make_density(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
    for (int k = 0; k < set.size(); ++k) {
      CHECK(expectation(max_mixed, set[k]) ==
            doctest::Approx(set[k].trace().real() / d).epsilon(1e-12));
    }
  }
}

TEST_CASE("summed LOO variances equal d minus the purity") {
  testing::Rng rng(17);
  for (int d : {2, 3, 4}) {
    auto set = gell_mann_loos(d);
    for (int trial = 0; trial < 25; ++trial) {
      auto rho = testing::random_density(d, rng);
      double total = 0.0;
      for (int k = 0; k < set.size(); ++k) {
        const double mean = expectation(rho, set[k]);
        total += expectation(rho, set[k] * set[k]) - mean * mean;
      }
      CHECK(total == doctest::Approx(d - purity(rho)).epsilon(1e-9));
    }
  }
}

TEST_CASE("LOO uncertainty bound d-1 is attained exactly on pure states") {
  testing::Rng rng(19);
  for (int d : {2, 3}) {
    CHECK(lur_bound_loos(d) == doctest::Approx(d - 1.0));
    auto set = gell_mann_loos(d);
    double min_sum = 1e300;
    for (int trial = 0; trial < 400; ++trial) {
      auto rho = testing::random_pure(d, rng);
      double total = 0.0;
      for (int k = 0; k < set.size(); ++k) {
        const double mean = expectation(rho, set[k]);
        total += expectation(rho, set[k] * set[k]) - mean * mean;
      }
      min_sum = std::min(min_sum, total);
      CHECK(total >= d - 1.0 - 1e-9);
    }
    CHECK(min_sum == doctest::Approx(d - 1.0).epsilon(1e-9));
  }
}
