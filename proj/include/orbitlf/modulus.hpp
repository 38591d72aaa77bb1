#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "orbitlf/numeric.hpp"

namespace orbitlf {

// Prime-power modulus q = p^k with the discrete-log machinery every other
// module relies on: a fixed generator g of (Z/q)^* (smallest primitive root
// mod p^2, reduced mod q when k = 1) and the full index table
// iota(g^j mod q) = j, built in one pass.
//
// q_k := phi(p^k). Character a evaluates as chi_a(n) = e(a * iota(n) / q_k).
class PrimePowerModulus {
public:
  PrimePowerModulus(std::uint64_t p, int k);

  std::uint64_t p() const { return p_; }
  int k() const { return k_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t group_order() const { return qk_; }  // q_k = phi(p^k)
  std::uint64_t generator() const { return g_; }

  bool is_unit(std::uint64_t n) const { return n % p_ != 0; }

  static constexpr std::uint32_t npos = static_cast<std::uint32_t>(-1);

  // iota(n) for gcd(n, p) = 1; npos on non-units. n is reduced mod q.
  std::uint32_t index(std::uint64_t n) const {
    std::uint32_t i = index_[n % q_];
    return i;
  }

  std::uint64_t power_of_generator(std::uint64_t j) const { return pow_[j % qk_]; }

  // p^e for 0 <= e <= k
  std::uint64_t p_pow(int e) const { return ppow_[e]; }
  // phi(p^h) for 0 <= h <= k (phi(1) = 1)
  std::uint64_t group_order_at_height(int h) const { return h == 0 ? 1 : ppow_[h - 1] * (p_ - 1); }

  // e(j / q_k), exact table
  cplx unit_root(std::uint64_t j) const { return unit_roots_[j % qk_]; }
  // e(j / q), exact table (additive characters)
  cplx additive_root(std::uint64_t j) const { return add_roots_[j % q_]; }

  std::uint64_t inverse(std::uint64_t n) const;  // unit inverse mod q

private:
  std::uint64_t p_;
  int k_;
  std::uint64_t q_;
  std::uint64_t qk_;
  std::uint64_t g_;
  std::vector<std::uint64_t> ppow_;
  std::vector<std::uint32_t> index_;
  std::vector<std::uint64_t> pow_;
  std::vector<cplx> unit_roots_;
  std::vector<cplx> add_roots_;
};

// Result of build_modulus; shared_ptr because orbits/characters hold views
// into the table-owning object.
using ModulusPtr = std::shared_ptr<const PrimePowerModulus>;
ModulusPtr build_modulus(std::uint64_t p, int k);

// Multiplicative order of n mod q through the index table:
// ord(n) = q_k / gcd(iota(n), q_k).
std::uint64_t multiplicative_order(std::uint64_t n, const PrimePowerModulus& m);

// Teichmuller lift: the unique (p-1)-st root of unity mod p^alpha congruent
// to j mod p, computed as j^(p^(alpha-1)) mod p^alpha.
std::uint64_t teichmuller_lift(std::uint64_t j, std::uint64_t p, int alpha);

}  // namespace orbitlf
