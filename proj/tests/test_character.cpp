#include <cmath>

#include "doctest.h"
#include "orbitlf/character.hpp"
#include "orbitlf/errors.hpp"

using namespace orbitlf;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("character values on the generator ladder") {
  auto m = build_modulus(3, 2);  // q = 9, q_k = 6, g = 2
  DirichletCharacter chi(m, 1);
  CHECK(chi.eval(2) == UnitRootValue::root(1, 6));
  CHECK(chi.eval(4) == UnitRootValue::root(2, 6));
  CHECK(chi.eval(1) == UnitRootValue::root(0, 6));
  CHECK(chi.eval(3).is_zero());
  CHECK(chi.eval(6).is_zero());
  CHECK(std::abs(chi(2) - std::polar(1.0, 2 * kPi / 6)) < 1e-15);
  CHECK(chi(9) == cplx(0.0, 0.0));
  CHECK(char_eval(chi, 8) == UnitRootValue::root(3, 6));
}

TEST_CASE("height from the p-part of the residue") {
  auto m = build_modulus(3, 5);  // q_k = 162
  CHECK(DirichletCharacter(m, 0).height() == 0);
  CHECK(DirichletCharacter(m, 0).principal());
  CHECK(DirichletCharacter(m, 81).height() == 1);  // 81 = 3^4
  CHECK(DirichletCharacter(m, 27).height() == 2);
  CHECK(DirichletCharacter(m, 9).height() == 3);
  CHECK(DirichletCharacter(m, 3).height() == 4);
  CHECK(DirichletCharacter(m, 1).height() == 5);
  CHECK(DirichletCharacter(m, 1).primitive());
  CHECK(DirichletCharacter(m, 100).primitive());  // 100 = 4 * 25, no 3-part
  CHECK_FALSE(DirichletCharacter(m, 54).primitive());
}

TEST_CASE("multiplicativity, parity, characteristic") {
  auto m = build_modulus(5, 2);
  DirichletCharacter chi(m, 3);
  const std::uint64_t q = m->q();
  for (std::uint64_t a = 1; a < q; ++a)
    for (std::uint64_t b = a; b < q; ++b) {
      cplx lhs = chi(a * b % q);
      cplx rhs = chi(a) * chi(b);
      CHECK(std::abs(lhs - rhs) < 1e-14);
    }
  // chi(-1) = (-1)^parity
  for (std::uint64_t a = 0; a < m->group_order(); ++a) {
    DirichletCharacter c(m, a);
    CHECK(std::abs(c(q - 1) - cplx(c.parity() ? -1.0 : 1.0, 0.0)) < 1e-14);
  }
  CHECK(chi.characteristic() == 1);
  CHECK(DirichletCharacter(m, 4).characteristic() == 4);
  CHECK(DirichletCharacter(m, 6).characteristic() == 2);
}

TEST_CASE("conjugate and product track residues") {
  auto m = build_modulus(3, 3);
  DirichletCharacter a(m, 5), b(m, 7);
  CHECK(a.conjugate().residue() == m->group_order() - 5);
  CHECK(a.times(b).residue() == 12);
  for (std::uint64_t n = 1; n < m->q(); ++n) {
    if (n % 3 == 0) continue;
    CHECK(std::abs(a.conjugate()(n) - std::conj(a(n))) < 1e-15);
    CHECK(std::abs(a.times(b)(n) - a(n) * b(n)) < 1e-14);
  }
}

TEST_CASE("gauss sum support and magnitude across heights") {
  auto m = build_modulus(3, 4);  // k = 4
  const std::uint64_t q = m->q();
  for (std::uint64_t a : {1ULL, 2ULL, 3ULL, 6ULL, 9ULL, 18ULL, 27ULL}) {
    DirichletCharacter chi(m, a);
    int h = chi.height();
    for (std::uint64_t n = 1; n < q; ++n) {
      double mag = std::abs(gauss_sum(chi, n));
      if (padic_valuation(n, 3) == 4 - h) {
        double want = std::pow(3.0, 4 - h / 2.0);
        CHECK(std::abs(mag - want) < 1e-6 * want);
      } else {
        CHECK(mag < 1e-8);
      }
    }
  }
}

TEST_CASE("root numbers of primitive characters are unimodular") {
  auto m = build_modulus(5, 3);
  for (std::uint64_t a : {1ULL, 2ULL, 3ULL, 7ULL, 11ULL, 99ULL}) {
    DirichletCharacter chi(m, a);
    REQUIRE(chi.primitive());
    CHECK(std::abs(std::abs(root_number(chi)) - 1.0) < 1e-10);
    // eps_conj = conj(eps) * chi(-1)
    cplx lhs = root_number(chi.conjugate());
    cplx rhs = std::conj(root_number(chi)) * chi(m->q() - 1);
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}
