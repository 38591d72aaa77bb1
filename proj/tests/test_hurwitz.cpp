#include <cmath>

#include "doctest.h"
#include "orbitlf/errors.hpp"
#include "orbitlf/hurwitz.hpp"

using namespace orbitlf;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286;
}

TEST_CASE("hurwitz zeta against closed forms") {
  CHECK(std::abs(hurwitz_zeta(cplx(2.0, 0.0), 1.0) - kPi * kPi / 6.0) < 1e-12);
  CHECK(std::abs(hurwitz_zeta(cplx(2.0, 0.0), 0.5) - kPi * kPi / 2.0) < 1e-12);
  CHECK(std::abs(hurwitz_zeta(cplx(4.0, 0.0), 1.0) - kPi * kPi * kPi * kPi / 90.0) < 1e-12);
  CHECK(std::abs(hurwitz_zeta(cplx(0.5, 0.0), 1.0) - (-1.4603545088095868)) < 1e-12);
}

TEST_CASE("hurwitz zeta against frozen high-precision values") {
  CHECK(std::abs(hurwitz_zeta(cplx(0.5, 0.0), 1.0 / 3.0) - (-0.11808332793422172)) < 1e-11);
  CHECK(std::abs(hurwitz_zeta(cplx(2.5, 1.5), 0.7) -
                 cplx(2.2227163295840431, 0.92542983768072866)) < 1e-11);
  CHECK(std::abs(hurwitz_zeta(cplx(0.5, 3.0), 0.25) -
                 cplx(-0.82131599561179788, -2.1179135469010689)) < 1e-11);
}

TEST_CASE("hurwitz multiplication theorem") {
  // sum_{j=1..m} zeta(s, j/m) = m^s zeta(s)
  for (cplx s : {cplx(0.5, 0.0), cplx(0.5, 3.0), cplx(2.0, -1.0)}) {
    for (int mm : {3, 4, 5}) {
      ckahan acc;
      for (int j = 1; j <= mm; ++j) acc.add(hurwitz_zeta(s, double(j) / mm));
      cplx rhs = std::pow(cplx(double(mm), 0.0), s) * hurwitz_zeta(s, 1.0);
      CHECK(std::abs(acc.value() - rhs) < 1e-10);
    }
  }
}

TEST_CASE("hurwitz zeta rejects the pole and bad a") {
  CHECK_THROWS_AS(hurwitz_zeta(cplx(1.0, 0.0), 0.5), error);
  CHECK_THROWS_AS(hurwitz_zeta(cplx(2.0, 0.0), 0.0), error);
  CHECK_THROWS_AS(hurwitz_zeta(cplx(2.0, 0.0), 1.5), error);
}

TEST_CASE("truncation depths converge") {
  // deeper tail correction should not move the value at the defaults' scale
  HurwitzParams deep;
  deep.shift = 60;
  deep.tail = 12;
  for (cplx s : {cplx(0.5, 0.0), cplx(0.5, 5.0)})
    for (double a : {0.1, 1.0 / 3.0, 1.0})
      CHECK(std::abs(hurwitz_zeta(s, a) - hurwitz_zeta(s, a, deep)) < 1e-12);
}

TEST_CASE("digamma") {
  CHECK(std::abs(digamma(1.0) - (-kEulerGamma)) < 1e-13);
  CHECK(std::abs(digamma(0.5) - (-1.9635100260214235)) < 1e-13);
  CHECK(std::abs(digamma(0.31) - (-3.3837143319490451)) < 1e-12);
  CHECK(std::abs(digamma(7.25) - 1.910453526883736) < 1e-13);
  // recurrence psi(x+1) = psi(x) + 1/x
  for (double x : {0.2, 0.7, 1.3, 5.5})
    CHECK(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) < 1e-12);
  CHECK_THROWS_AS(digamma(0.0), error);
  CHECK_THROWS_AS(digamma(-2.5), error);
}
