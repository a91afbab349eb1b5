#include <doctest.h>

#include "qsteer/families.hpp"

using namespace qsteer;

TEST_CASE("werner-2 at p=1 collapses to the singlet") {
  auto state = family_state(Family::Werner2, 1.0);
  ComplexMatrix singlet = ComplexMatrix::Zero(4, 4);
  singlet(1, 1) = singlet(2, 2) = 0.5;
  singlet(1, 2) = singlet(2, 1) = -0.5;
  CHECK((state.joint.matrix() - singlet).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("werner-2 marginals are maximally mixed") {
  for (double p : {0.0, 0.35, 1.0}) {
    auto state = family_state(Family::Werner2, p);
    CHECK(purity(partial_trace(state, Party::A)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(purity(partial_trace(state, Party::B)) == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("noisy-singlet marginal purities follow the closed forms") {
  // P_A = 1 - p + p^2/2,  P_B = 5/9 - p/9 + p^2/18. The marginal mixedness is
  // asymmetric for every p < 1 (the gap is (4/9)(1-p)^2), in particular at
  // p = 4/7 and p = 2/5.
  for (double p : {0.2, 2.0 / 5.0, 4.0 / 7.0, 0.9}) {
    auto state = family_state(Family::NoisySinglet, p);
    const double pa = purity(partial_trace(state, Party::A));
    const double pb = purity(partial_trace(state, Party::B));
    CHECK(pa == doctest::Approx(1.0 - p + p * p / 2.0).epsilon(1e-12));
    CHECK(pb == doctest::Approx(5.0 / 9.0 - p / 9.0 + p * p / 18.0).epsilon(1e-12));
    CHECK(pa - pb == doctest::Approx(4.0 / 9.0 * (1 - p) * (1 - p)).epsilon(1e-12));
  }
}

TEST_CASE("isotropic qutrit family has maximally mixed marginals at every F") {
  for (double f : {0.0, 0.25, 0.5, 1.0}) {
    auto state = family_state(Family::IsotropicQutritF, f);
    for (Party party : {Party::A, Party::B}) {
      auto reduced = partial_trace(state, party);
      CHECK((reduced.matrix() - ComplexMatrix::Identity(3, 3) / 3.0).cwiseAbs().maxCoeff() <
            1e-12);
    }
  }
}

TEST_CASE("two-qutrit F' family has maximally mixed marginals") {
  auto state = family_state(Family::TwoQutritFprime, 0.6);
  CHECK(purity(partial_trace(state, Party::A)) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(purity(partial_trace(state, Party::B)) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("family parameter range is enforced") {
  CHECK_THROWS_AS(family_state(Family::Werner2, -0.01), Error);
  CHECK_THROWS_AS(family_state(Family::NoisySinglet, 1.01), Error);
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::NoisySinglet, Family::IsotropicQutritF, Family::Werner2,
                   Family::TwoQutritFprime, Family::Explicit}) {
    CHECK(family_from_name(family_name(f)) == f);
  }
  CHECK_THROWS_AS(family_from_name("bogus"), ParseError);
}
