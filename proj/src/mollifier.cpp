#include "orbitlf/mollifier.hpp"

#include <algorithm>
#include <cmath>

#include "orbitlf/errors.hpp"

namespace orbitlf {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_even_ell(int ell) {
  require(ell >= 2 && ell % 2 == 0, errc::odd_ell, "ell must be even and >= 2");
}

}  // namespace

double lambda_constant() {
  // exp(-x) - x - x^2/2 is strictly decreasing on [0, 1] with a sign change
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    double f = std::exp(-mid) - mid - 0.5 * mid * mid;
    (f > 0.0 ? lo : hi) = mid;
    if (hi - lo < 1e-15) break;
  }
  return 0.5 * (lo + hi);
}

double MollifierParams::c_bound(int v) {
  const double e4 = std::exp(0.25) - 1.0;
  return 4.0 * e4 * e4 * e4 * e4 / (std::exp(1.0) * std::pow(static_cast<double>(v + 2), 4.0));
}

MollifierParams MollifierParams::paper_mode(std::uint64_t q, int v, double c) {
  require(q >= 27, errc::bad_parameters, "paper mode needs q >= 27");
  require(v >= 1, errc::bad_parameters, "v >= 1");
  require(c > 0.0, errc::bad_parameters, "c must be positive");
  require(c < c_bound(v), errc::bad_parameters,
          "c violates the admissible-range bound 4(e^(1/4)-1)^4 / (e (v+2)^4)");

  MollifierParams out;
  out.mode = Mode::paper;
  out.q = q;
  out.v = v;
  out.c = c;
  out.lambda = lambda_constant();

  const double lq = std::log(static_cast<double>(q));
  const double llq = std::log(lq);
  for (int j = 0;; ++j) {
    double beta_j = std::exp(static_cast<double>(j)) * llq / lq;
    if (beta_j >= c) break;
    out.beta.push_back(beta_j);
  }
  out.beta.push_back(c);

  for (double beta_j : out.beta) {
    int s_j = 2 * static_cast<int>(std::floor(1.0 / (8.0 * beta_j)));
    require(s_j >= 2, errc::bad_parameters, "paper mode produced s_j < 2");
    int ell_j = static_cast<int>(std::floor(std::pow(static_cast<double>(s_j), 0.75)));
    require(ell_j % 2 == 0, errc::odd_ell,
            "paper mode produced an odd ell_j; adjust c");
    out.s.push_back(s_j);
    out.ell.push_back(ell_j);
  }
  return out;
}

MollifierParams MollifierParams::desk_mode(std::uint64_t q, int v, std::vector<double> beta,
                                           std::vector<int> ell, std::vector<int> s) {
  require(q >= 27, errc::bad_parameters, "desk mode needs q >= 27");
  require(v >= 1, errc::bad_parameters, "v >= 1");
  require(!beta.empty() && beta.size() == ell.size(), errc::bad_parameters,
          "beta and ell must be nonempty and equally sized");
  for (std::size_t i = 0; i < beta.size(); ++i) {
    require(beta[i] > 0.0, errc::bad_parameters, "beta entries must be positive");
    if (i > 0)
      require(beta[i] > beta[i - 1], errc::bad_parameters, "beta must be strictly increasing");
    check_even_ell(ell[i]);
  }
  MollifierParams out;
  out.mode = Mode::desk;
  out.q = q;
  out.v = v;
  out.c = beta.back();
  out.beta = std::move(beta);
  out.ell = std::move(ell);
  out.lambda = lambda_constant();
  if (s.empty()) {
    for (double beta_j : out.beta) {
      out.s.push_back(2 * std::max(1, static_cast<int>(std::floor(1.0 / (8.0 * beta_j)))));
    }
  } else {
    require(s.size() == out.beta.size(), errc::bad_parameters, "s must match beta in size");
    for (int s_j : s) require(s_j >= 2 && s_j % 2 == 0, errc::bad_parameters, "s entries even >= 2");
    out.s = std::move(s);
  }
  return out;
}

double MollifierParams::log_q() const { return std::log(static_cast<double>(q)); }

double MollifierParams::interval_lo(int j) const {
  require(j >= 0 && j <= K(), errc::j_out_of_range, "interval index out of range");
  return j == 0 ? 1.0 : std::pow(static_cast<double>(q), beta[j - 1]);
}

double MollifierParams::interval_hi(int j) const {
  require(j >= 0 && j <= K(), errc::j_out_of_range, "interval index out of range");
  // relative nudge so exact-power boundaries land inside their interval
  return std::pow(static_cast<double>(q), beta[j]) * (1.0 + 1e-12);
}

std::vector<std::uint32_t> MollifierParams::interval_primes(int j) const {
  const double lo = interval_lo(j), hi = interval_hi(j);
  std::vector<std::uint32_t> out;
  for (std::uint32_t rho : primes_up_to(static_cast<std::uint64_t>(hi))) {
    if (static_cast<double>(rho) > lo && static_cast<double>(rho) <= hi) out.push_back(rho);
  }
  return out;
}

bool MollifierParams::size_hypothesis() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < beta.size(); ++i) acc += ell[i] * beta[i];
  return (v + 2) * acc < 1.0;
}

double a_coeff(double rho, int u, const MollifierParams& params) {
  require(u >= 0 && u <= params.K(), errc::j_out_of_range, "a_coeff: u out of range");
  const double blq = params.beta[u] * params.log_q();
  return (1.0 - std::log(rho) / blq) * std::pow(rho, -params.lambda / blq);
}

double b_coeff(double rho, int j, const MollifierParams& params) {
  require(j >= 0 && j <= params.K(), errc::j_out_of_range, "b_coeff: j out of range");
  const double blq = params.beta[j] * params.log_q();
  return (1.0 - 2.0 * std::log(rho) / blq) * std::pow(rho, -2.0 * params.lambda / blq);
}

double truncated_exp(double t, int ell, bool require_positive) {
  require(ell >= 0, errc::bad_parameters, "truncated_exp: ell >= 0");
  if (require_positive) check_even_ell(ell);
  double term = 1.0;
  kahan acc;
  acc.add(1.0);
  for (int s = 1; s <= ell; ++s) {
    term *= t / static_cast<double>(s);
    acc.add(term);
  }
  return acc.value();
}

cplx truncated_exp(const cplx& t, int ell) {
  require(ell >= 0, errc::bad_parameters, "truncated_exp: ell >= 0");
  cplx term(1.0, 0.0);
  ckahan acc;
  acc.add(term);
  for (int s = 1; s <= ell; ++s) {
    term *= t / static_cast<double>(s);
    acc.add(term);
  }
  return acc.value();
}

PIntervalValue p_interval(const DirichletCharacter& chi, int j, int u,
                          const MollifierParams& params) {
  require(u >= j, errc::j_out_of_range, "p_interval: need u >= j");
  PIntervalValue out;
  auto primes = params.interval_primes(j);
  out.prime_count = primes.size();
  out.empty = primes.empty();
  ckahan acc;
  for (std::uint32_t rho : primes) {
    acc.add(chi(rho) * (a_coeff(rho, u, params) / std::sqrt(static_cast<double>(rho))));
  }
  out.value = acc.value();
  return out;
}

namespace {

// depth-first enumeration of I_j-smooth n with Omega(n) <= cap; calls
// visit(n, omega, sign, a_product, nu) for every n > 1 and handles n = 1 at
// the call site.
template <class Visit>
void enumerate_smooth(const std::vector<std::uint32_t>& primes, std::size_t from, int cap,
                      std::uint64_t n, int omega, double aprod, double nu, int u,
                      const MollifierParams& params, Visit&& visit) {
  for (std::size_t i = from; i < primes.size(); ++i) {
    const double a = a_coeff(primes[i], u, params);
    std::uint64_t m = n;
    double ap = aprod;
    double fact = 1.0;
    for (int e = 1; omega + e <= cap; ++e) {
      m *= primes[i];
      ap *= a;
      fact *= e;
      visit(m, omega + e, ap, nu / fact);
      enumerate_smooth(primes, i + 1, cap, m, omega + e, ap, nu / fact, u, params, visit);
    }
  }
}

}  // namespace

MollifierPiece mollifier_piece(const DirichletCharacter& chi, int j,
                               const MollifierParams& params) {
  require(chi.modulus().q() == params.q, errc::bad_parameters,
          "mollifier_piece: character modulus mismatch");
  MollifierPiece out;
  PIntervalValue pv = p_interval(chi, j, params.K(), params);
  out.exp_route = truncated_exp(-pv.value, params.ell[j]);

  ckahan acc;
  acc.add(cplx(1.0, 0.0));  // n = 1 term
  std::uint64_t terms = 1;
  auto primes = params.interval_primes(j);
  enumerate_smooth(primes, 0, params.ell[j], 1, 0, 1.0, 1.0, params.K(), params,
                   [&](std::uint64_t n, int omega, double aprod, double nu) {
                     const double sign = (omega % 2 == 0) ? 1.0 : -1.0;
                     acc.add(chi(n % params.q) *
                             (sign * aprod * nu / std::sqrt(static_cast<double>(n))));
                     ++terms;
                   });
  out.divisor_route = acc.value();
  out.divisor_terms = terms;
  return out;
}

cplx mollifier(const DirichletCharacter& chi, const MollifierParams& params) {
  cplx m(1.0, 0.0);
  for (int j = 0; j <= params.K(); ++j) {
    PIntervalValue pv = p_interval(chi, j, params.K(), params);
    m *= truncated_exp(-pv.value, params.ell[j]);
  }
  return m;
}

double nu_factor(const std::vector<std::pair<std::uint64_t, int>>& fac) {
  double nu = 1.0;
  for (auto [p, e] : fac) {
    (void)p;
    nu /= factorial(e);
  }
  return nu;
}

double nu_v(std::uint64_t n, int v, int ell) {
  require(v >= 1, errc::bad_parameters, "nu_v: v >= 1");
  auto fac = factorize(n);
  int omega = 0;
  for (auto [p, e] : fac) {
    (void)p;
    omega += e;
  }
  if (v == 1) return omega <= ell ? nu_factor(fac) : 0.0;

  // enumerate divisors d | n with Omega(d) <= ell, recurse on n/d
  double total = 0.0;
  std::vector<std::uint64_t> divisors{1};
  for (auto [p, e] : fac) {
    std::size_t base = divisors.size();
    std::uint64_t pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t b = 0; b < base; ++b) divisors.push_back(divisors[b] * pe);
    }
  }
  for (std::uint64_t d : divisors) {
    auto dfac = factorize(d);
    int domega = 0;
    for (auto [p, e] : dfac) {
      (void)p;
      domega += e;
    }
    if (domega > ell) continue;
    total += nu_factor(dfac) * nu_v(n / d, v - 1, ell);
  }
  return total;
}

MollifierPowerCheck mollifier_power_check(const DirichletCharacter& chi, int j, int v,
                                          const MollifierParams& params) {
  require(v >= 1, errc::bad_parameters, "mollifier_power_check: v >= 1");
  MollifierPowerCheck out;
  MollifierPiece piece = mollifier_piece(chi, j, params);
  out.direct_power = std::pow(piece.exp_route, v);

  ckahan acc;
  acc.add(cplx(1.0, 0.0));
  auto primes = params.interval_primes(j);
  enumerate_smooth(primes, 0, v * params.ell[j], 1, 0, 1.0, 1.0, params.K(), params,
                   [&](std::uint64_t n, int omega, double aprod, double /*nu*/) {
                     const double sign = (omega % 2 == 0) ? 1.0 : -1.0;
                     const double nv = nu_v(n, v, params.ell[j]);
                     if (nv == 0.0) return;
                     acc.add(chi(n % params.q) *
                             (sign * aprod * nv / std::sqrt(static_cast<double>(n))));
                   });
  out.nu_route = acc.value();
  return out;
}

double s_jv(const DirichletCharacter& chi, int j, int v, const MollifierParams& params) {
  require(j >= 0 && j <= params.K(), errc::j_out_of_range, "s_jv: j out of range");
  const double hi = std::sqrt(params.interval_hi(j));
  kahan acc;
  for (std::uint32_t rho : primes_up_to(static_cast<std::uint64_t>(hi))) {
    cplx c2 = chi(mul_mod(rho, rho, params.q));
    acc.add(c2.real() * b_coeff(rho, j, params) / static_cast<double>(rho));
  }
  return std::exp(v * acc.value());
}

double d_jv(const DirichletCharacter& chi, int j, int v, const MollifierParams& params) {
  require(j >= 0 && j <= params.K(), errc::j_out_of_range, "d_jv: j out of range");
  double prod = 1.0;
  for (int r = 0; r <= j; ++r) {
    PIntervalValue pv = p_interval(chi, r, j, params);
    prod *= (1.0 + std::exp(-0.5 * params.ell[r])) *
            truncated_exp(v * pv.value.real(), params.ell[r], true);
  }
  return prod;
}

TrMembership t_r_membership(const DirichletCharacter& chi, int r,
                            const MollifierParams& params) {
  require(r >= 0 && r <= params.K(), errc::j_out_of_range, "t_r_membership: r out of range");
  TrMembership out;
  out.bound = params.ell[r] / (params.v * std::exp(2.0));
  for (int u = r; u <= params.K(); ++u) {
    PIntervalValue pv = p_interval(chi, r, u, params);
    out.max_abs = std::max(out.max_abs, std::abs(pv.value.real()));
  }
  out.in_t_r = out.max_abs <= out.bound;
  return out;
}

MainPropCase main_prop_case(const DirichletCharacter& chi, const MollifierParams& params) {
  MainPropCase out;
  if (!t_r_membership(chi, 0, params).in_t_r) {
    out.kind = PropCase::not_in_t0;
    out.first_failure = 0;
    return out;
  }
  for (int r = 1; r <= params.K(); ++r) {
    if (!t_r_membership(chi, r, params).in_t_r) {
      out.kind = PropCase::first_failure_at;
      out.first_failure = r;
      return out;
    }
  }
  out.kind = PropCase::in_all_t_r;
  return out;
}

double log_l_upper_rhs(const DirichletCharacter& chi, double x, const MollifierParams& params) {
  require(std::log(x) >= 2.0, errc::x_too_small, "log_l_upper_rhs: need log x >= 2");
  const double lx = std::log(x);
  const double lam = params.lambda;
  const std::uint64_t nmax = static_cast<std::uint64_t>(x);
  SpfSieve sieve(nmax);
  kahan acc;
  for (std::uint64_t n = 2; n <= nmax; ++n) {
    // von Mangoldt support: prime powers only
    std::uint64_t p = sieve.spf(n);
    std::uint64_t m = n;
    while (m % p == 0) m /= p;
    if (m != 1) continue;
    const double logp = std::log(static_cast<double>(p));
    const cplx cv = chi(n % chi.modulus().q());
    if (cv.real() == 0.0 && cv.imag() == 0.0) continue;
    const double ln = std::log(static_cast<double>(n));
    const double w =
        std::pow(static_cast<double>(n), -(0.5 + lam / lx)) / ln * (lx - ln) / lx;
    acc.add(cv.real() * logp * w);
  }
  return acc.value() +
         (1.0 + lam) / 2.0 * std::log(static_cast<double>(chi.modulus().q())) / lx;
}

MollifiedSecondMoment mollified_second_moment(const GaloisOrbit& orbit,
                                              const DirichletCharacter& eta1,
                                              const DirichletCharacter& eta2,
                                              const MollifierParams& params,
                                              const MomentOptions& opts) {
  require(params.q == orbit.modulus().q(), errc::bad_parameters,
          "mollified_second_moment: params built for a different q");
  MomentEngine engine(orbit, eta1, eta2, opts);
  MollifiedSecondMoment out;

  ckahan acc;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    DirichletCharacter chi = orbit.character(i);
    cplx m1 = mollifier(chi.times(eta1), params);
    cplx m2 = mollifier(chi.times(eta2), params);
    acc.add(engine.l_products()[i] * m1 * std::conj(m2));
  }
  out.value = acc.value() / static_cast<double>(orbit.size());

  // Predicted constant: L(1, eta) times an Euler product over the mollifier
  // support; each local factor is the (i, j, k) correction sum truncated at
  // total degree 12 with j*k = 0 (the two off-diagonal directions never mix).
  DirichletCharacter eta = eta1.times(eta2.conjugate());
  cplx prod(1.0, 0.0);
  double tail_bound = 0.0;
  for (std::uint32_t rho :
       primes_up_to(static_cast<std::uint64_t>(params.interval_hi(params.K())))) {
    if (static_cast<double>(rho) > params.interval_hi(params.K())) continue;
    const cplx er = eta(rho);
    if (er.real() == 0.0 && er.imag() == 0.0) continue;  // rho = p contributes factor 1
    const double a = a_coeff(rho, params.K(), params);
    cplx factor(0.0, 0.0);
    constexpr int kDegreeCap = 12;
    for (int i = 0; i <= kDegreeCap; ++i) {
      for (int jm = 0; i + jm <= kDegreeCap; ++jm) {
        for (int jn = 0; i + jm + jn <= kDegreeCap; ++jn) {
          if (jm != 0 && jn != 0) continue;
          const int deg = i + jm + jn;
          const double sign = (jm + jn) % 2 == 0 ? 1.0 : -1.0;
          factor += sign * std::pow(a, 2 * i + jm + jn) * std::pow(er, deg) /
                    (factorial(i + jm) * factorial(i + jn) *
                     std::pow(static_cast<double>(rho), deg));
        }
      }
    }
    prod *= factor;
    // terms of degree d carry |a|^(<=2d) / (rho^d); |a| <= 1 on the support,
    // so the discarded tail is below sum_{d>12} (d+1) rho^-d
    const double r = 1.0 / static_cast<double>(rho);
    tail_bound += 14.0 * std::pow(r, 13) / ((1.0 - r) * (1.0 - r));
  }
  out.b_const = engine.l_one_eta() * prod;
  out.b_tail_bound = tail_bound;
  out.ratio = out.value / out.b_const;
  return out;
}

MollifiedVthMoment mollified_vth_moment(ModulusPtr mod, int v, const MollifierParams& params,
                                        const MomentOptions& opts) {
  require(v >= 1, errc::bad_parameters, "mollified_vth_moment: v >= 1");
  require(params.q == mod->q(), errc::bad_parameters,
          "mollified_vth_moment: params built for a different q");
  LValueTable table(mod, cplx(0.5, 0.0), opts.hurwitz);
  MollifiedVthMoment out;
  kahan acc;
  for (std::uint64_t a = 1; a < mod->group_order(); ++a) {
    DirichletCharacter chi(mod, a);
    if (!chi.primitive()) continue;
    ++out.characters;
    const double mag = std::abs(table.value(chi) * mollifier(chi, params));
    acc.add(std::pow(mag, static_cast<double>(v)));
  }
  out.value = acc.value();
  out.ratio = out.value / static_cast<double>(mod->q());
  return out;
}

HolderLowerBound holder_lower_bound(const GaloisOrbit& orbit, const DirichletCharacter& eta1,
                                    const DirichletCharacter& eta2,
                                    const MollifierParams& params, const MomentOptions& opts) {
  MomentEngine engine(orbit, eta1, eta2, opts);
  HolderLowerBound out;
  out.orbit_size = orbit.size();

  const double n_orbit = static_cast<double>(orbit.size());
  NonvanishingCount nv = nonvanishing_count(orbit, eta1, eta2, 1e-8, opts);
  out.nonvanishing = nv.count;

  LValueTable table(orbit.modulus_ptr(), cplx(0.5, 0.0), opts.hurwitz);
  ckahan s_acc;
  kahan f1_acc, f2_acc;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    DirichletCharacter chi = orbit.character(i);
    DirichletCharacter psi1 = chi.times(eta1);
    DirichletCharacter psi2 = chi.times(eta2);
    cplx m1 = mollifier(psi1, params);
    cplx m2 = mollifier(psi2, params);
    s_acc.add(engine.l_products()[i] * m1 * std::conj(m2));
    double v1 = std::abs(table.value(psi1) * m1);
    double v2 = std::abs(table.value(psi2) * m2);
    f1_acc.add(v1 * v1 * v1 * v1);
    f2_acc.add(v2 * v2 * v2 * v2);
  }

  out.s_avg = s_acc.value() / n_orbit;
  out.f1_avg = f1_acc.value() / n_orbit;
  out.f2_avg = f2_acc.value() / n_orbit;

  const double s_raw4 = std::pow(std::abs(s_acc.value()), 4.0);
  const double rhs = static_cast<double>(out.nonvanishing) * static_cast<double>(out.nonvanishing) *
                     f1_acc.value() * f2_acc.value();
  out.chain_slack = rhs == 0.0 ? (s_raw4 == 0.0 ? 0.0 : -1.0) : s_raw4 / rhs - 1.0;
  out.chain_ok = s_raw4 <= rhs * (1.0 + 1e-9);

  if (out.f1_avg > 0.0 && out.f2_avg > 0.0) {
    out.lower_bound_proportion =
        std::pow(std::abs(out.s_avg), 4.0) / (out.f1_avg * out.f2_avg);
    out.lower_bound_count = n_orbit * out.lower_bound_proportion;
  }
  return out;
}

}  // namespace orbitlf
