#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace orbitlf {

using cplx = std::complex<double>;

// Neumaier-compensated accumulator. Summation order is fixed by the caller,
// so results are bit-reproducible across runs and thread counts.
struct kahan {
  double s = 0.0;
  double c = 0.0;

  void add(double x) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

struct ckahan {
  kahan re, im;

  void add(const cplx& z) {
    re.add(z.real());
    im.add(z.imag());
  }
  cplx value() const { return {re.value(), im.value()}; }
};

// Exact unit-root exponent j/d (value e(j/d)); d = 0 encodes the zero value
// taken on non-units.
struct UnitRootValue {
  std::uint64_t num = 0;
  std::uint64_t den = 0;

  bool is_zero() const { return den == 0; }
  static UnitRootValue zero() { return {0, 0}; }
  static UnitRootValue root(std::uint64_t j, std::uint64_t d) { return {j % d, d}; }
  bool operator==(const UnitRootValue&) const = default;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);  // requires gcd(a,m)=1

bool is_prime_u64(std::uint64_t n);

// Prime factorization by trial division; adequate for the desk-scale inputs
// (arguments are p^k or phi(p^k) with p^k <= 1e7, plus small cofactors).
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

// Multiplicative order of n modulo m, for gcd(n,m)=1, via the factored
// Carmichael/phi exponent. Used as the cross-check oracle for the index-table
// route.
std::uint64_t order_mod(std::uint64_t n, std::uint64_t m);

// Exponent of p in n (n > 0). For n = 0 returns a large sentinel (64).
int padic_valuation(std::uint64_t n, std::uint64_t p);

std::vector<std::uint32_t> primes_up_to(std::uint64_t n);

// Smallest-prime-factor sieve; shared by the von Mangoldt sums and the
// divisor-route mollifier checks.
class SpfSieve {
public:
  explicit SpfSieve(std::uint64_t n);
  std::uint64_t limit() const { return spf_.size() - 1; }
  std::uint32_t spf(std::uint64_t n) const { return spf_[n]; }
  std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t n) const;
  int big_omega(std::uint64_t n) const;  // number of prime factors with multiplicity

private:
  std::vector<std::uint32_t> spf_;
};

}  // namespace orbitlf
