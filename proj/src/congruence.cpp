#include "orbitlf/congruence.hpp"

#include <chrono>
#include <cmath>

#include "orbitlf/errors.hpp"
#include "orbitlf/modulus.hpp"

namespace orbitlf {

namespace {

constexpr double kMaxBoxProduct = 4e12;  // progression-walk work cap: (p-1)*(B + AB/p^a)

std::uint64_t coprime_count_in(std::uint64_t lo, std::uint64_t hi, std::uint64_t p) {
  // #{n in [lo, hi) : p does not divide n}
  if (hi <= lo) return 0;
  auto multiples = [&](std::uint64_t x) { return x == 0 ? 0 : (x - 1) / p; };
  return (hi - lo) - (multiples(hi) - multiples(lo));
}

}  // namespace

CongruenceCountReport count_congruence(const DyadicBox& box) {
  auto t0 = std::chrono::steady_clock::now();

  require(is_prime_u64(box.p) && box.p % 2 == 1, errc::not_prime,
          "count_congruence: p must be an odd prime");
  require(box.alpha >= 1, errc::bad_parameters, "count_congruence: alpha >= 1");
  require(box.A >= 1.0 && box.B >= 1.0, errc::bad_parameters,
          "count_congruence: anchors must be >= 1");

  CongruenceCountReport rep;
  rep.p = box.p;
  rep.alpha = box.alpha;
  rep.A = static_cast<std::uint64_t>(std::ceil(box.A));
  rep.B = static_cast<std::uint64_t>(std::ceil(box.B));
  rep.anchors_rounded = (static_cast<double>(rep.A) != box.A) ||
                        (static_cast<double>(rep.B) != box.B);

  const std::uint64_t p = box.p;
  std::uint64_t palpha = 1;
  for (int e = 0; e < box.alpha; ++e) {
    require(palpha <= (std::uint64_t(1) << 62) / p, errc::box_too_large,
            "count_congruence: p^alpha overflows");
    palpha *= p;
  }
  const double Ad = static_cast<double>(rep.A), Bd = static_cast<double>(rep.B);
  require((p - 1) * (Bd + Ad * Bd / static_cast<double>(palpha)) <= kMaxBoxProduct,
          errc::box_too_large, "count_congruence: box walk exceeds the work cap");

  std::vector<std::uint64_t> zetas(p);  // zetas[j] = Teichmuller lift of j
  for (std::uint64_t j = 1; j < p; ++j) zetas[j] = teichmuller_lift(j, p, box.alpha);

  rep.per_zeta.assign(p, 0);
  const std::uint64_t a_lo = rep.A, a_hi = 2 * rep.A;
  const std::uint64_t b_lo = rep.B, b_hi = 2 * rep.B;

  for (std::uint64_t j = 1; j < p; ++j) {
    const std::uint64_t zeta = zetas[j];
    std::uint64_t cnt = 0;
    for (std::uint64_t b = b_lo; b < b_hi; ++b) {
      if (b % p == 0) continue;
      // count a in [A, 2A) with a = zeta*b mod p^alpha; such a is automatically
      // coprime to p since zeta*b is
      const std::uint64_t r = mul_mod(zeta, b % palpha, palpha);
      std::uint64_t first = a_lo + ((r + palpha - a_lo % palpha) % palpha);
      if (first < a_hi) cnt += (a_hi - 1 - first) / palpha + 1;
    }
    rep.per_zeta[j] = cnt;
  }

  // remove the diagonal a = b (it satisfies a = zeta*b only for zeta = 1)
  const std::uint64_t diag =
      coprime_count_in(std::max(a_lo, b_lo), std::min(a_hi, b_hi), p);
  require(rep.per_zeta[1] >= diag, errc::bad_parameters,
          "count_congruence: diagonal exceeded the zeta=1 class");
  rep.per_zeta[1] -= diag;

  rep.d1_raw = rep.per_zeta[1] + (p > 2 ? rep.per_zeta[p - 1] : 0);
  for (std::uint64_t j = 2; j + 1 < p; ++j) rep.d2_raw += rep.per_zeta[j];
  rep.d0_raw = rep.d1_raw + rep.d2_raw;

  const double norm = std::sqrt(Ad * Bd);
  rep.d0_normalized = static_cast<double>(rep.d0_raw) / norm;
  rep.d1_normalized = static_cast<double>(rep.d1_raw) / norm;
  rep.d2_normalized = static_cast<double>(rep.d2_raw) / norm;

  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

NaiveBoundCheck naive_bound_check(const DyadicBox& box) {
  NaiveBoundCheck out;
  out.report = count_congruence(box);
  const double Ad = static_cast<double>(out.report.A);
  const double Bd = static_cast<double>(out.report.B);
  const double palpha = std::pow(static_cast<double>(box.p), box.alpha);
  const double mn = std::min(Ad, Bd), mx = std::max(Ad, Bd);
  out.bound = static_cast<double>(box.p - 1) * mn * (mx / palpha + 1.0);
  out.margin = out.bound - static_cast<double>(out.report.d0_raw);
  out.ok = out.margin >= 0.0;
  return out;
}

RothRidoutProbe roth_ridout_probe(std::uint64_t p, int alpha, double delta) {
  require(delta > 0.0 && delta < 0.25, errc::delta_out_of_range,
          "roth_ridout_probe: need 0 < delta < 1/4");
  require(is_prime_u64(p) && p % 2 == 1, errc::not_prime, "roth_ridout_probe: p odd prime");
  require(alpha >= 1, errc::bad_parameters, "roth_ridout_probe: alpha >= 1");

  RothRidoutProbe probe;
  probe.p = p;
  probe.alpha = alpha;
  probe.delta = delta;
  probe.size_limit = std::pow(static_cast<double>(p), alpha * (0.5 - delta));

  std::vector<std::uint64_t> anchors;
  for (std::uint64_t a = 1; 2.0 * static_cast<double>(a) < probe.size_limit; a *= 2)
    anchors.push_back(a);
  // count the first oversized anchor pair row/column as skipped diagnostics
  const std::uint64_t n = anchors.size();
  probe.boxes_skipped = 2 * n + 1;  // boxes with exactly one or both anchors doubled past the limit

  for (std::uint64_t a : anchors) {
    for (std::uint64_t b : anchors) {
      DyadicBox box{static_cast<double>(a), static_cast<double>(b), p, alpha};
      CongruenceCountReport rep = count_congruence(box);
      ++probe.boxes_checked;
      probe.d0_total += rep.d0_raw;
      probe.d1_total += rep.d1_raw;
      probe.d2_total += rep.d2_raw;
      probe.max_box_d0 = std::max(probe.max_box_d0, rep.d0_raw);
    }
  }
  return probe;
}

PrimePowerLemmaCheck lemma_prime_power_check(std::uint64_t p, int alpha) {
  require(is_prime_u64(p) && p % 2 == 1, errc::not_prime,
          "lemma_prime_power_check: p odd prime");
  require(alpha >= 1, errc::bad_parameters, "lemma_prime_power_check: alpha >= 1");
  std::uint64_t palpha = 1;
  for (int e = 0; e < alpha; ++e) {
    require(palpha <= (std::uint64_t(1) << 40) / p, errc::box_too_large,
            "lemma_prime_power_check: p^alpha too large for the exhaustive sweep");
    palpha *= p;
  }
  const std::uint64_t pam1 = palpha / p;  // p^(alpha-1)

  PrimePowerLemmaCheck out;
  out.holds = true;
  for (std::uint64_t v = 1; v < palpha; ++v) {
    if (pow_mod(v, p, palpha) == 1) {
      ++out.solutions;
      out.witnesses.push_back(v);
      if (alpha >= 2 && v % pam1 != 1) out.holds = false;
    }
  }
  return out;
}

}  // namespace orbitlf
