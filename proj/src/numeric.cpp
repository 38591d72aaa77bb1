#include "orbitlf/numeric.hpp"

#include "orbitlf/errors.hpp"

namespace orbitlf {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  // extended Euclid on (a mod m, m)
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), newr = static_cast<std::int64_t>(a % m);
  while (newr != 0) {
    std::int64_t q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  require(r == 1, errc::not_coprime, "inv_mod: argument shares a factor with the modulus");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int mobius(std::uint64_t n) {
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    r -= r / p;
  }
  return r;
}

std::uint64_t order_mod(std::uint64_t n, std::uint64_t m) {
  require(std::gcd(n % m, m) == 1, errc::not_coprime, "order_mod: gcd(n, m) != 1");
  std::uint64_t ord = euler_phi(m);
  for (auto [p, e] : factorize(ord)) {
    (void)e;
    while (ord % p == 0 && pow_mod(n, ord / p, m) == 1) ord /= p;
  }
  return ord;
}

int padic_valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return 64;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint32_t> primes;
  if (n < 2) return primes;
  std::vector<bool> sieve(n + 1, true);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (sieve[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= n; j += i) sieve[j] = false;
    }
  }
  return primes;
}

SpfSieve::SpfSieve(std::uint64_t n) : spf_(n + 1, 0) {
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (spf_[i] == 0) {
      for (std::uint64_t j = i; j <= n; j += i) {
        if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
      }
    }
  }
}

std::vector<std::pair<std::uint64_t, int>> SpfSieve::factor(std::uint64_t n) const {
  std::vector<std::pair<std::uint64_t, int>> out;
  while (n > 1) {
    std::uint64_t p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

int SpfSieve::big_omega(std::uint64_t n) const {
  int c = 0;
  while (n > 1) {
    n /= spf_[n];
    ++c;
  }
  return c;
}

}  // namespace orbitlf
