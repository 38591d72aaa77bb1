#include "orbitlf/modulus.hpp"

#include <cmath>
#include <numbers>

#include "orbitlf/errors.hpp"

namespace orbitlf {

namespace {

constexpr std::uint64_t kMaxModulus = 10'000'000;  // index table memory cap

// Smallest primitive root mod p^2. Order checks run against the factored
// group order p(p-1); a primitive root mod p^2 stays primitive mod every p^k.
std::uint64_t smallest_primitive_root_mod_p2(std::uint64_t p) {
  const std::uint64_t m = p * p;
  const std::uint64_t ord = p * (p - 1);
  auto fac = factorize(ord);
  for (std::uint64_t g = 2;; ++g) {
    if (g % p == 0) continue;
    bool primitive = true;
    for (auto [ell, e] : fac) {
      (void)e;
      if (pow_mod(g, ord / ell, m) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
}

}  // namespace

PrimePowerModulus::PrimePowerModulus(std::uint64_t p, int k) : p_(p), k_(k) {
  require(p >= 2 && is_prime_u64(p), errc::not_prime, "p must be prime");
  require(p != 2, errc::even_prime, "p = 2 is outside the supported odd prime-power family");
  require(k >= 1, errc::bad_parameters, "k must be >= 1");

  ppow_.resize(k + 1);
  ppow_[0] = 1;
  for (int e = 1; e <= k; ++e) {
    require(ppow_[e - 1] <= kMaxModulus / p, errc::modulus_too_large,
            "p^k exceeds the supported table size");
    ppow_[e] = ppow_[e - 1] * p;
  }
  q_ = ppow_[k];
  qk_ = ppow_[k - 1] * (p - 1);

  g_ = smallest_primitive_root_mod_p2(p) % q_;

  // verify the order of g mod q directly (paranoia is cheap here, once per build)
  for (auto [ell, e] : factorize(qk_)) {
    (void)e;
    require(pow_mod(g_, qk_ / ell, q_) != 1, errc::bad_parameters,
            "generator failed its order check");
  }

  index_.assign(q_, npos);
  pow_.resize(qk_);
  std::uint64_t x = 1;
  for (std::uint64_t j = 0; j < qk_; ++j) {
    index_[x] = static_cast<std::uint32_t>(j);
    pow_[j] = x;
    x = mul_mod(x, g_, q_);
  }
  require(x == 1, errc::bad_parameters, "index table did not close into a cycle");

  unit_roots_.resize(qk_);
  for (std::uint64_t j = 0; j < qk_; ++j) {
    double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(qk_);
    unit_roots_[j] = {std::cos(t), std::sin(t)};
  }
  add_roots_.resize(q_);
  for (std::uint64_t j = 0; j < q_; ++j) {
    double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(q_);
    add_roots_[j] = {std::cos(t), std::sin(t)};
  }
}

std::uint64_t PrimePowerModulus::inverse(std::uint64_t n) const {
  std::uint32_t i = index(n);
  require(i != npos, errc::not_coprime, "inverse of a non-unit");
  return pow_[(qk_ - i) % qk_];
}

ModulusPtr build_modulus(std::uint64_t p, int k) {
  return std::make_shared<const PrimePowerModulus>(p, k);
}

std::uint64_t multiplicative_order(std::uint64_t n, const PrimePowerModulus& m) {
  std::uint32_t i = m.index(n);
  require(i != PrimePowerModulus::npos, errc::not_coprime, "multiplicative_order: gcd(n, q) != 1");
  return m.group_order() / std::gcd(static_cast<std::uint64_t>(i), m.group_order());
}

std::uint64_t teichmuller_lift(std::uint64_t j, std::uint64_t p, int alpha) {
  require(is_prime_u64(p) && p % 2 == 1, errc::not_prime, "teichmuller_lift: p must be an odd prime");
  require(j >= 1 && j <= p - 1, errc::j_out_of_range, "teichmuller_lift: need 1 <= j <= p-1");
  require(alpha >= 1, errc::bad_parameters, "teichmuller_lift: alpha >= 1");
  std::uint64_t palpha = 1;
  for (int e = 0; e < alpha; ++e) {
    require(palpha <= (std::uint64_t(1) << 62) / p, errc::modulus_too_large,
            "teichmuller_lift: p^alpha overflows");
    palpha *= p;
  }
  std::uint64_t exp = palpha / p;  // p^(alpha-1)
  return pow_mod(j, exp, palpha);
}

}  // namespace orbitlf
