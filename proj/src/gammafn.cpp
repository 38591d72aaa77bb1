#include "orbitlf/gammafn.hpp"

#include <cmath>
#include <numbers>

namespace orbitlf {

namespace {

// Godfrey's Lanczos coefficients for g = 607/128.
constexpr double kG = 607.0 / 128.0;
constexpr double kC[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

cplx lanczos_lgamma_pos(const cplx& z) {
  // valid for Re z >= 1/2; computes log Gamma(z)
  cplx zm1 = z - 1.0;
  cplx sum = kC[0];
  for (int i = 1; i < 15; ++i) sum += kC[i] / (zm1 + static_cast<double>(i));
  cplx t = zm1 + kG + 0.5;
  constexpr double half_log_2pi = 0.91893853320467274178;  // log(2*pi)/2
  return half_log_2pi + (zm1 + 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

cplx clgamma(const cplx& z) {
  if (z.real() >= 0.5) return lanczos_lgamma_pos(z);
  // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
  const double pi = std::numbers::pi;
  return std::log(pi) - std::log(std::sin(pi * z)) - lanczos_lgamma_pos(1.0 - z);
}

cplx cgamma(const cplx& z) { return std::exp(clgamma(z)); }

}  // namespace orbitlf
