#include <cmath>
#include <numeric>

#include "doctest.h"
#include "orbitlf/errors.hpp"
#include "orbitlf/orbits.hpp"

using namespace orbitlf;

TEST_CASE("full orbits mod 9") {
  auto m = build_modulus(3, 2);
  GaloisOrbit o1 = GaloisOrbit::full_orbit(m, 1);
  CHECK(o1.members() == std::vector<std::uint64_t>{1, 5});
  CHECK(o1.parity() == 1);
  CHECK(o1.base_residue() == 1);
  GaloisOrbit o2 = GaloisOrbit::full_orbit(m, 2);
  CHECK(o2.members() == std::vector<std::uint64_t>{2, 4});
  CHECK(o2.parity() == 0);
  CHECK_THROWS_AS(GaloisOrbit::full_orbit(m, 3), error);  // 3 does not divide p-1

  // degenerate: k = 1, c = p-1 has no primitive members
  auto m1 = build_modulus(3, 1);
  CHECK(GaloisOrbit::full_orbit(m1, 2).size() == 0);
}

TEST_CASE("orbit sizes follow phi(q_k / c)") {
  auto m = build_modulus(7, 2);
  for (std::uint64_t c : {1ULL, 2ULL, 3ULL, 6ULL})
    CHECK(GaloisOrbit::full_orbit(m, c).size() == euler_phi(m->group_order() / c));
}

TEST_CASE("thin orbits partition the parent with forced sizes") {
  auto m = build_modulus(3, 3);
  GaloisOrbit parent = GaloisOrbit::full_orbit(m, 1);
  REQUIRE(parent.size() == 6);

  auto thin1 = GaloisOrbit::thin_orbits(m, 1, parent);
  std::size_t total = 0;
  std::uint64_t prev_base = 0;
  for (const auto& th : thin1) {
    CHECK(th.size() == 3);  // p^kappa for kappa <= k-2
    CHECK(th.kappa() == 1);
    CHECK(th.parity() == parent.parity());
    CHECK(th.base_residue() == th.members().front());
    CHECK(th.base_residue() > prev_base);
    prev_base = th.base_residue();
    total += th.size();
  }
  CHECK(total == parent.size());

  auto thin2 = GaloisOrbit::thin_orbits(m, 2, parent);  // kappa = k-1
  for (const auto& th : thin2) CHECK(th.size() == 3 * 2);  // p^(k-2) (p-1)
  CHECK(thin2.size() == 1);

  CHECK_THROWS_AS(GaloisOrbit::thin_orbits(m, 3, parent), error);
  CHECK_THROWS_AS(GaloisOrbit::thin_orbits(m, -1, parent), error);
}

TEST_CASE("thin orbit sizes at q = 3^5") {
  auto m = build_modulus(3, 5);
  GaloisOrbit parent = GaloisOrbit::full_orbit(m, 1);
  auto thin = GaloisOrbit::thin_orbits(m, 1, parent);
  CHECK(thin.size() == parent.size() / 3);
  for (const auto& th : thin) CHECK(th.size() == 3);
}

TEST_CASE("orbit average matches the mu(d)/phi(d) closed form") {
  auto m = build_modulus(3, 2);
  GaloisOrbit o1 = GaloisOrbit::full_orbit(m, 1);
  OrbitAverage avg = orbit_average(o1, 8);  // iota(8) = 3, d = 2
  CHECK(avg.d == 2);
  CHECK(avg.closed_num == -1);
  CHECK(avg.closed_den == 1);
  CHECK(std::abs(avg.value - cplx(-1.0, 0.0)) < 1e-15);
  CHECK(std::abs(avg.value - avg.brute) < 1e-12);

  CHECK(std::abs(orbit_average(o1, 1).value - cplx(1.0, 0.0)) < 1e-15);
  CHECK_THROWS_AS(orbit_average(o1, 6), error);  // not coprime to p

  // brute force vs closed form across a larger modulus
  auto big = build_modulus(5, 3);
  for (std::uint64_t c : {1ULL, 2ULL, 4ULL}) {
    GaloisOrbit orb = GaloisOrbit::full_orbit(big, c);
    for (std::uint64_t n = 1; n < big->q(); ++n) {
      if (n % 5 == 0) continue;
      OrbitAverage a = orbit_average(orb, n);
      CHECK(a.has_closed_form);
      CHECK(std::abs(a.value - a.brute) < 1e-10);
      double want = static_cast<double>(a.closed_num) / static_cast<double>(a.closed_den);
      CHECK(std::abs(a.value.real() - want) < 1e-12);
      CHECK(std::abs(a.value.imag()) < 1e-12);
    }
  }
}

TEST_CASE("thin averages reassemble the full average") {
  auto m = build_modulus(3, 4);
  GaloisOrbit parent = GaloisOrbit::full_orbit(m, 1);
  for (int kappa : {1, 2}) {
    auto thin = GaloisOrbit::thin_orbits(m, kappa, parent);
    for (std::uint64_t n : {2ULL, 5ULL, 10ULL, 80ULL}) {
      cplx whole = orbit_average(parent, n).value * static_cast<double>(parent.size());
      ckahan acc;
      for (const auto& th : thin)
        acc.add(orbit_average(th, n).value * static_cast<double>(th.size()));
      CHECK(std::abs(acc.value() - whole) < 1e-10 * parent.size());
    }
  }
}

TEST_CASE("epsilon-weighted averages: two routes and the vanishing criterion") {
  auto m = build_modulus(3, 4);
  GaloisOrbit orbit = GaloisOrbit::full_orbit(m, 1);
  // eta = eta1 conj(eta2) has height 2, so the vanishing criterion
  // n^(p-1) = 1 mod p^2 actually cuts: only n = +-1 mod 9 survive.
  DirichletCharacter eta1(m, 9);
  DirichletCharacter eta2(m, 27);
  EpsilonAverageTable table(orbit, eta1, eta2);
  CHECK(table.max_route_disagreement() <= 1e-8);

  const std::uint64_t q = m->q();
  std::size_t zeros = 0;
  for (std::uint64_t n = 1; n < q; ++n) {
    if (n % 3 == 0) continue;
    EpsilonAverage e = table.at(n);
    CHECK(std::abs(e.route_direct - e.route_wsum) <= 1e-8);
    if (e.vanishes) {
      CHECK(e.value == cplx(0.0, 0.0));
      ++zeros;
    } else {
      // provable termwise bound on route (b)
      CHECK(std::abs(e.value) <= e.term_count_bound + 1e-12);
    }
    CHECK(std::abs(e.value - table.value(n)) == 0.0);
  }
  CHECK(zeros == 36);  // 54 units minus the 18 with n = +-1 mod 9

  // one-shot wrapper agrees with the table
  EpsilonAverage one = epsilon_weighted_orbit_average(orbit, eta1, eta2, 2);
  CHECK(std::abs(one.value - table.at(2).value) < 1e-15);

  // a height-(k-1) eta makes the criterion vacuous: every unit survives
  EpsilonAverageTable open_table(orbit, DirichletCharacter(m, 3), eta2);
  for (std::uint64_t n = 1; n < m->q(); ++n)
    if (n % 3 != 0) CHECK_FALSE(open_table.at(n).vanishes);
}

TEST_CASE("eta pair validation") {
  auto m = build_modulus(3, 4);
  GaloisOrbit orbit = GaloisOrbit::full_orbit(m, 1);
  DirichletCharacter prim(m, 1), e3(m, 3), e9(m, 9), e0(m, 0);
  CHECK(validate_eta_pair(orbit, e3, e9) == DirichletCharacter(m, 54 - 6).height());
  CHECK_THROWS_AS(validate_eta_pair(orbit, prim, e3), error);  // eta must be imprimitive
  CHECK_THROWS_AS(validate_eta_pair(orbit, e3, e3), error);  // equal pair degenerates
  // a principal eta1 is fine as long as the quotient has interior height
  CHECK(validate_eta_pair(orbit, e0, e3) == DirichletCharacter(m, 54 - 3).height());
  DirichletCharacter foreign(build_modulus(3, 3), 3);
  CHECK_THROWS_AS(validate_eta_pair(orbit, foreign, e9), error);
}
