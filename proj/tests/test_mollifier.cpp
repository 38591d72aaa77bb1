#include <cmath>

#include "doctest.h"
#include "orbitlf/errors.hpp"
#include "orbitlf/mollifier.hpp"

using namespace orbitlf;

TEST_CASE("lambda solves exp(-x) = x + x^2/2") {
  double lam = lambda_constant();
  CHECK(std::abs(std::exp(-lam) - lam - 0.5 * lam * lam) < 1e-12);
  CHECK(lam > 0.49);
  CHECK(lam < 0.492);
}

TEST_CASE("truncated exponential") {
  CHECK(truncated_exp(-1.0, 2) == 0.5);
  CHECK(truncated_exp(3.7, 0) == 1.0);
  CHECK(truncated_exp(0.5, 30) == doctest::Approx(std::exp(0.5)).epsilon(1e-14));
  cplx z = truncated_exp(cplx(0.0, 1.0), 40);
  CHECK(std::abs(z - std::polar(1.0, 1.0)) < 1e-14);
  CHECK_THROWS_AS(truncated_exp(1.0, 3, true), error);  // positivity needs even ell
  CHECK_THROWS_AS(truncated_exp(1.0, -1), error);
}

TEST_CASE("grid inequality: exp(t) <= (1 + exp(-ell/2)) E_ell(t) on the working range") {
  const double e2 = std::exp(2.0);
  for (int ell = 2; ell <= 20; ell += 2) {
    const double r = ell / e2;
    const double factor = 1.0 + std::exp(-0.5 * ell);
    for (int i = 0; i <= 400; ++i) {
      double t = -r + 2.0 * r * i / 400.0;
      double el = truncated_exp(t, ell, true);
      CHECK(el > 0.0);
      CHECK(std::exp(t) <= factor * el * (1.0 + 1e-13));
    }
  }
}

TEST_CASE("paper mode constructor gates") {
  double bound = MollifierParams::c_bound(4);
  CHECK(bound == doctest::Approx(7.389e-6).epsilon(1e-3));
  CHECK(MollifierParams::c_bound(2) > bound);  // shrinks as v grows
  CHECK(MollifierParams::c_bound(6) < bound);

  CHECK_THROWS_AS(MollifierParams::paper_mode(81, 4, bound * 1.01), error);
  CHECK_THROWS_AS(MollifierParams::paper_mode(81, 4, bound), error);
  // c = 7e-6 is admissible but lands on an odd ell_j = 2601
  try {
    MollifierParams::paper_mode(81, 4, 7e-6);
    FAIL("expected the odd-ell rejection");
  } catch (const error& e) {
    CHECK(e.code() == errc::odd_ell);
  }

  MollifierParams ok = MollifierParams::paper_mode(81, 4, 1e-6);
  CHECK(ok.mode == MollifierParams::Mode::paper);
  CHECK(ok.K() == 0);
  CHECK(ok.beta == std::vector<double>{1e-6});
  CHECK(ok.s[0] > 100000);
  CHECK(ok.s[0] % 2 == 0);
  CHECK(ok.ell[0] % 2 == 0);
  // q^beta_K < 2 empties every interval, so M = 1 identically
  CHECK(ok.interval_primes(0).empty());
  auto m = build_modulus(3, 4);
  CHECK(mollifier(DirichletCharacter(m, 1), ok) == cplx(1.0, 0.0));
}

TEST_CASE("desk mode constructor gates") {
  CHECK_THROWS_AS(MollifierParams::desk_mode(81, 4, {0.35, 0.15}, {4, 4}), error);
  CHECK_THROWS_AS(MollifierParams::desk_mode(81, 4, {0.15, 0.35}, {4, 3}), error);
  CHECK_THROWS_AS(MollifierParams::desk_mode(81, 4, {}, {}), error);
  CHECK_THROWS_AS(MollifierParams::desk_mode(81, 4, {0.15}, {4, 4}), error);

  MollifierParams p = MollifierParams::desk_mode(243, 4, {0.15, 0.35}, {4, 4});
  CHECK(p.K() == 1);
  CHECK(p.c == 0.35);
  CHECK(p.s.size() == 2);
  CHECK(p.interval_lo(0) == 1.0);
  CHECK(p.interval_hi(1) == doctest::Approx(std::pow(243.0, 0.35)).epsilon(1e-9));
  CHECK(p.interval_primes(0) == std::vector<std::uint32_t>{2});
  CHECK(p.interval_primes(1) == std::vector<std::uint32_t>{3, 5});
  CHECK_THROWS_AS(p.interval_lo(2), error);
}

TEST_CASE("coefficient shapes") {
  MollifierParams p = MollifierParams::desk_mode(243, 4, {0.15, 0.35}, {4, 4});
  // a vanishes at the interval-1 right endpoint scale q^beta_1
  double edge = std::pow(243.0, 0.35);
  CHECK(std::abs(a_coeff(edge, 1, p)) < 1e-12);
  CHECK(a_coeff(2.0, 1, p) > 0.0);
  // b changes sign at sqrt of the same edge
  CHECK(b_coeff(std::sqrt(edge) * 0.9, 1, p) > 0.0);
  CHECK(b_coeff(std::sqrt(edge) * 1.1, 1, p) < 0.0);
  CHECK_THROWS_AS(a_coeff(2.0, 5, p), error);
}

TEST_CASE("nu weights") {
  CHECK(nu_factor({}) == 1.0);
  CHECK(nu_factor({{2, 3}}) == doctest::Approx(1.0 / 6.0));
  CHECK(nu_factor({{2, 2}, {5, 1}}) == doctest::Approx(0.5));

  // nu(p^a) = 1/a! under a generous cap, 0 beyond the cap
  CHECK(nu_v(8, 1, 10) == doctest::Approx(1.0 / 6.0));
  CHECK(nu_v(8, 1, 2) == 0.0);
  CHECK(nu_v(1, 1, 4) == 1.0);

  // v-fold convolution identity checked directly
  for (int ell : {2, 4}) {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
      double direct = nu_v(n, 2, ell);
      double conv = 0.0;
      for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) conv += nu_v(d, 1, ell) * nu_v(n / d, 1, ell);
      CHECK(std::abs(direct - conv) < 1e-12);
    }
  }
  for (std::uint64_t n : {2310ULL, 4096ULL, 9972ULL, 10000ULL}) {
    double direct = nu_v(n, 3, 4);
    double conv = 0.0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) conv += nu_v(d, 1, 4) * nu_v(n / d, 2, 4);
    CHECK(std::abs(direct - conv) < 1e-12);
  }

  // multiplicative across coprime arguments
  CHECK(nu_v(36, 2, 4) == doctest::Approx(nu_v(4, 2, 4) * nu_v(9, 2, 4)));
}

TEST_CASE("mollifier two-route equality") {
  auto m = build_modulus(3, 5);
  MollifierParams params = MollifierParams::desk_mode(243, 4, {0.15, 0.35}, {4, 4});
  for (std::uint64_t a : {1ULL, 2ULL, 7ULL, 25ULL, 161ULL}) {
    DirichletCharacter chi(m, a);
    cplx product(1.0, 0.0);
    for (int j = 0; j <= params.K(); ++j) {
      MollifierPiece piece = mollifier_piece(chi, j, params);
      CHECK(std::abs(piece.exp_route - piece.divisor_route) <= 1e-12);
      product *= piece.exp_route;
    }
    CHECK(std::abs(mollifier(chi, params) - product) < 1e-14);
  }
  // interval 1 is nonempty, so its divisor route has real terms
  MollifierPiece piece = mollifier_piece(DirichletCharacter(m, 1), 1, params);
  CHECK(piece.divisor_terms > 1);
}

TEST_CASE("power identity through nu_v") {
  auto m = build_modulus(3, 5);
  MollifierParams params = MollifierParams::desk_mode(243, 4, {0.15, 0.35}, {4, 4});
  for (std::uint64_t a : {1ULL, 5ULL}) {
    DirichletCharacter chi(m, a);
    for (int v : {2, 3}) {
      MollifierPowerCheck chk = mollifier_power_check(chi, 1, v, params);
      CHECK(std::abs(chk.direct_power - chk.nu_route) < 1e-10);
    }
  }
}

TEST_CASE("trichotomy is exhaustive and matches membership") {
  auto m = build_modulus(3, 4);
  MollifierParams params = MollifierParams::desk_mode(81, 4, {0.15, 0.35}, {4, 4});
  int not_in_t0 = 0, in_all = 0, failed_later = 0;
  for (std::uint64_t a = 1; a < m->group_order(); ++a) {
    if (a % 3 == 0) continue;
    DirichletCharacter chi(m, a);
    MainPropCase mc = main_prop_case(chi, params);
    TrMembership t0 = t_r_membership(chi, 0, params);
    CHECK(t0.bound == doctest::Approx(4.0 / (4.0 * std::exp(2.0))));
    switch (mc.kind) {
      case PropCase::not_in_t0:
        ++not_in_t0;
        CHECK_FALSE(t0.in_t_r);
        CHECK(mc.first_failure == 0);
        break;
      case PropCase::in_all_t_r:
        ++in_all;
        CHECK(t0.in_t_r);
        CHECK(t_r_membership(chi, 1, params).in_t_r);
        break;
      case PropCase::first_failure_at:
        ++failed_later;
        CHECK(t0.in_t_r);
        CHECK(mc.first_failure == 1);
        CHECK_FALSE(t_r_membership(chi, 1, params).in_t_r);
        break;
    }
  }
  CHECK(not_in_t0 + in_all + failed_later == 36);
  // frozen classification at this modulus: interval 0 holds no primes, so
  // T_0 membership is automatic and 24 of 36 escape T_1
  CHECK(not_in_t0 == 0);
  CHECK(in_all == 12);
  CHECK(failed_later == 24);
}

TEST_CASE("conditional upper bound pieces stay finite and guarded") {
  auto m = build_modulus(3, 4);
  MollifierParams params = MollifierParams::desk_mode(81, 4, {0.15, 0.35}, {4, 4});
  DirichletCharacter chi(m, 1);
  CHECK_THROWS_AS(log_l_upper_rhs(chi, 5.0, params), error);  // needs log x >= 2
  double rhs = log_l_upper_rhs(chi, 81.0, params);
  CHECK(std::isfinite(rhs));
  CHECK(s_jv(chi, 1, 4, params) > 0.0);
  CHECK(d_jv(chi, 1, 4, params) > 0.0);
}

TEST_CASE("mollified second moment, vth moment, and the Holder chain") {
  auto m = build_modulus(3, 4);
  MollifierParams params = MollifierParams::desk_mode(81, 4, {0.15, 0.35}, {4, 4});
  GaloisOrbit orbit = GaloisOrbit::full_orbit(m, 1);
  DirichletCharacter eta1(m, 3), eta2(m, 27);

  MollifiedSecondMoment sm = mollified_second_moment(orbit, eta1, eta2, params);
  CHECK(std::abs(sm.value) > 0.0);
  CHECK(std::abs(sm.b_const) > 0.0);
  CHECK(sm.b_tail_bound >= 0.0);
  CHECK(sm.b_tail_bound < 0.05);
  CHECK(std::abs(sm.ratio * sm.b_const - sm.value) < 1e-12);

  MollifiedVthMoment vm = mollified_vth_moment(m, 4, params);
  CHECK(vm.characters == 36);
  CHECK(vm.value > 0.0);
  CHECK(vm.ratio == doctest::Approx(vm.value / 81.0));

  HolderLowerBound hb = holder_lower_bound(orbit, eta1, eta2, params);
  CHECK(hb.orbit_size == orbit.size());
  CHECK(hb.chain_ok);
  CHECK(hb.nonvanishing <= hb.orbit_size);
  CHECK(hb.f1_avg > 0.0);
  CHECK(hb.f2_avg > 0.0);
  CHECK(hb.lower_bound_proportion ==
        doctest::Approx(std::pow(std::abs(hb.s_avg), 4.0) / (hb.f1_avg * hb.f2_avg)));
  CHECK(hb.lower_bound_count <= hb.nonvanishing + 1e-9);
  CHECK(hb.lower_bound_count == doctest::Approx(hb.orbit_size * hb.lower_bound_proportion));
}
