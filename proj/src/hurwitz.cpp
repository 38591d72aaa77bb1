#include "orbitlf/hurwitz.hpp"

#include <cmath>

#include "orbitlf/errors.hpp"

namespace orbitlf {

namespace {

// B_2, B_4, ..., B_24
constexpr double kBernoulli[12] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
};

inline cplx real_pow(double x, const cplx& e) { return std::exp(e * std::log(x)); }

}  // namespace

double digamma(double x) {
  require(x > 0.0, errc::a_out_of_range, "digamma: argument must be positive");
  kahan shift;
  while (x < 12.0) {
    shift.add(-1.0 / x);
    x += 1.0;
  }
  // asymptotic series: log x - 1/(2x) - sum B_2j / (2j x^2j)
  double inv2 = 1.0 / (x * x);
  double pw = inv2;
  kahan tail;
  for (int j = 1; j <= 7; ++j) {
    tail.add(-kBernoulli[j - 1] / (2.0 * j) * pw);
    pw *= inv2;
  }
  return std::log(x) - 0.5 / x + tail.value() + shift.value();
}

cplx hurwitz_zeta(const cplx& s, double a, const HurwitzParams& params) {
  require(a > 0.0 && a <= 1.0, errc::a_out_of_range, "hurwitz_zeta: a must lie in (0, 1]");
  require(std::abs(s - cplx(1.0, 0.0)) > 1e-12, errc::pole_at_one, "hurwitz_zeta: pole at s = 1");
  require(params.tail >= 1 && params.tail <= 12 && params.shift >= 1, errc::bad_parameters,
          "hurwitz_zeta: unsupported truncation depths");

  const int N = params.shift, M = params.tail;

  ckahan direct;
  for (int n = 0; n < N; ++n) direct.add(real_pow(n + a, -s));

  const double Na = N + a;
  cplx total = direct.value();
  total += real_pow(Na, 1.0 - s) / (s - 1.0);
  total += 0.5 * real_pow(Na, -s);

  // tail: sum_j B_2j/(2j)! * s(s+1)...(s+2j-2) * (N+a)^(-s-2j+1)
  cplx rising = s;                       // accumulates the rising factorial
  cplx npow = real_pow(Na, -s - 1.0);    // (N+a)^(-s-2j+1) at j = 1
  double fact = 2.0;                     // (2j)!
  const double na2 = Na * Na;
  for (int j = 1; j <= M; ++j) {
    total += (kBernoulli[j - 1] / fact) * rising * npow;
    if (j < M) {
      rising *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
      npow /= na2;
      fact *= (2 * j + 1) * (2 * j + 2);
    }
  }
  return total;
}

}  // namespace orbitlf
