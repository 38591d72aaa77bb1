#include <cstdint>

#include "doctest.h"
#include "orbitlf/congruence.hpp"
#include "orbitlf/errors.hpp"

using namespace orbitlf;

namespace {

// reference count: powers of every box element, all pairs
CongruenceCountReport brute(const DyadicBox& box) {
  std::uint64_t pa = 1;
  for (int e = 0; e < box.alpha; ++e) pa *= box.p;
  auto A = static_cast<std::uint64_t>(std::ceil(box.A));
  auto B = static_cast<std::uint64_t>(std::ceil(box.B));
  CongruenceCountReport r;
  for (std::uint64_t a = A; a < 2 * A; ++a) {
    if (a % box.p == 0) continue;
    std::uint64_t ap = pow_mod(a % pa, box.p - 1, pa);
    for (std::uint64_t b = B; b < 2 * B; ++b) {
      if (b % box.p == 0 || a == b) continue;
      if (pow_mod(b % pa, box.p - 1, pa) != ap) continue;
      ++r.d0_raw;
      if (a % pa == b % pa || (a + b) % pa == 0) ++r.d1_raw;
    }
  }
  r.d2_raw = r.d0_raw - r.d1_raw;
  return r;
}

}  // namespace

TEST_CASE("progression walk equals the brute-force count") {
  for (DyadicBox box : {DyadicBox{25, 25, 5, 2}, DyadicBox{100, 100, 5, 3},
                        DyadicBox{64, 200, 3, 4}, DyadicBox{33, 57, 7, 2},
                        DyadicBox{150, 40, 7, 1}}) {
    CongruenceCountReport got = count_congruence(box);
    CongruenceCountReport want = brute(box);
    CHECK(got.d0_raw == want.d0_raw);
    CHECK(got.d1_raw == want.d1_raw);
    CHECK(got.d2_raw == want.d2_raw);
    CHECK(got.d0_raw == got.d1_raw + got.d2_raw);
    std::uint64_t zeta_sum = 0;
    for (std::uint64_t c : got.per_zeta) zeta_sum += c;
    CHECK(zeta_sum == got.d0_raw);
  }
}

TEST_CASE("p = 3 has no nontrivial Teichmuller classes") {
  // the only (p-1)-st roots of unity are +-1, so D2 = 0
  for (int alpha : {1, 2, 3, 5}) {
    CongruenceCountReport r = count_congruence({200, 200, 3, alpha});
    CHECK(r.d2_raw == 0);
    CHECK(r.d0_raw == r.d1_raw);
  }
}

TEST_CASE("degenerate one-element boxes") {
  CongruenceCountReport r = count_congruence({1, 1, 5, 2});
  CHECK(r.d0_raw == 0);  // only pair is a = b = 1, excluded
  CHECK(r.A == 1);
  CHECK(r.B == 1);
}

TEST_CASE("real anchors round up and get flagged") {
  CongruenceCountReport r = count_congruence({10.3, 4.0, 5, 2});
  CHECK(r.A == 11);
  CHECK(r.B == 4);
  CHECK(r.anchors_rounded);
  CHECK_FALSE(count_congruence({10, 4, 5, 2}).anchors_rounded);
}

TEST_CASE("normalization divides by sqrt(AB)") {
  CongruenceCountReport r = count_congruence({100, 400, 5, 2});
  CHECK(r.d0_normalized == doctest::Approx(r.d0_raw / 200.0));
  CHECK(r.d1_normalized == doctest::Approx(r.d1_raw / 200.0));
  CHECK(r.d2_normalized == doctest::Approx(r.d2_raw / 200.0));
}

TEST_CASE("naive bound holds with the expected margin") {
  NaiveBoundCheck nb = naive_bound_check({100, 100, 5, 3});
  CHECK(nb.ok);
  CHECK(nb.bound == doctest::Approx(4.0 * 100 * (100.0 / 125.0 + 1.0)));
  CHECK(nb.margin == doctest::Approx(nb.bound - nb.report.d0_raw));
  CHECK(nb.report.d0_raw == 188);  // frozen: independently measured walk
  CHECK(nb.report.d1_raw == 60);
  CHECK(nb.report.d2_raw == 128);

  for (DyadicBox box : {DyadicBox{500, 31, 3, 6}, DyadicBox{77, 77, 7, 3}})
    CHECK(naive_bound_check(box).ok);
}

TEST_CASE("roth-ridout probe sweeps the admissible dyadic anchors") {
  RothRidoutProbe pr = roth_ridout_probe(5, 3, 0.1);
  CHECK(pr.p == 5);
  CHECK(pr.alpha == 3);
  CHECK(pr.size_limit == doctest::Approx(std::pow(125.0, 0.4)));
  CHECK(pr.boxes_checked > 0);
  CHECK(pr.d0_total == pr.d1_total + pr.d2_total);
  CHECK_THROWS_AS(roth_ridout_probe(5, 3, 0.3), error);  // delta must stay below 1/4
}

TEST_CASE("prime-power lemma. solutions of m^p = 1 mod p^alpha") {
  PrimePowerLemmaCheck c1 = lemma_prime_power_check(3, 1);
  CHECK(c1.holds);
  CHECK(c1.solutions == 1);
  CHECK(c1.witnesses == std::vector<std::uint64_t>{1});

  PrimePowerLemmaCheck c4 = lemma_prime_power_check(3, 4);
  CHECK(c4.holds);
  CHECK(c4.solutions == 3);
  CHECK(c4.witnesses == std::vector<std::uint64_t>{1, 28, 55});  // 1 mod 27

  PrimePowerLemmaCheck c53 = lemma_prime_power_check(5, 3);
  CHECK(c53.holds);
  CHECK(c53.solutions == 5);
  CHECK(c53.witnesses == std::vector<std::uint64_t>{1, 26, 51, 76, 101});
}
