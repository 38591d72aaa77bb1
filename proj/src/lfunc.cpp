#include "orbitlf/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "orbitlf/errors.hpp"
#include "orbitlf/gammafn.hpp"
#include "orbitlf/parallel.hpp"

namespace orbitlf {

namespace {

constexpr double kPruneRatio = 1e-20;  // drop contour samples below this fraction of the peak

cplx ipow_neg(int m) {
  // i^(-m)
  switch (((m % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

}  // namespace

VKernel::VKernel(int kappa1, int kappa2, const SmoothingKernel& kernel)
    : k1_(kappa1), k2_(kappa2), kernel_(kernel) {
  require(kappa1 == 0 || kappa1 == 1, errc::bad_parameters, "kappa1 must be 0 or 1");
  require(kappa2 == 0 || kappa2 == 1, errc::bad_parameters, "kappa2 must be 0 or 1");
  require(kernel.T > 0 && kernel.delta > 0 && kernel.abscissa > 0, errc::bad_parameters,
          "kernel parameters must be positive");

  norm_ = cgamma(cplx((0.5 + k1_) / 2.0, 0.0)) * cgamma(cplx((0.5 + k2_) / 2.0, 0.0));

  const std::int64_t half = static_cast<std::int64_t>(std::llround(kernel.T / kernel.delta));
  std::vector<double> t;
  std::vector<cplx> w;
  std::vector<bool> even;
  t.reserve(2 * half + 1);
  double wmax = 0.0;
  for (std::int64_t i = -half; i <= half; ++i) {
    double ti = i * kernel.delta;
    cplx s(kernel.abscissa, ti);
    cplx wi = weight_at(s);
    t.push_back(ti);
    w.push_back(wi);
    even.push_back(i % 2 == 0);
    wmax = std::max(wmax, std::abs(wi));
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (std::abs(w[i]) >= kPruneRatio * wmax) {
      t_.push_back(t[i]);
      w_.push_back(w[i]);
      even_.push_back(even[i]);
    }
  }
}

cplx VKernel::weight_at(const cplx& s) const {
  cplx g1 = cgamma((0.5 + s + static_cast<double>(k1_)) / 2.0);
  cplx g2 = cgamma((0.5 + s + static_cast<double>(k2_)) / 2.0);
  cplx G = std::exp(s * s);
  return (kernel_.delta / (2.0 * std::numbers::pi)) * g1 * g2 / norm_ * G / s;
}

VValue VKernel::eval(double x) const {
  require(x > 0.0, errc::non_positive_argument, "v_kernel: x must be positive");
  const double lx = std::log(x);
  const double amp = std::exp(-kernel_.abscissa * lx);
  ckahan full, half;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    cplx term = w_[i] * cplx(std::cos(t_[i] * lx), -std::sin(t_[i] * lx));
    full.add(term);
    if (even_[i]) half.add(2.0 * term);
  }
  cplx vf = amp * full.value();
  cplx vh = amp * half.value();
  VValue out;
  out.value = vf.real();  // imaginary part cancels by t -> -t symmetry
  out.quad_error = std::abs(vf - vh);
  return out;
}

std::vector<double> VKernel::table(double scale, std::uint64_t max_product,
                                   unsigned threads) const {
  require(scale > 0.0, errc::non_positive_argument, "v table: scale must be positive");
  std::vector<double> out(max_product + 1, 0.0);
  const double base = std::numbers::pi / scale;
  parallel_for(max_product, threads, [&](std::size_t idx) {
    const std::uint64_t u = idx + 1;
    const double lx = std::log(base * static_cast<double>(u));
    const double amp = std::exp(-kernel_.abscissa * lx);
    // one sincos, then rotate sample to sample (uniform delta grid; the kept
    // block is contiguous because |w| decays monotonically past its peak)
    const cplx rot(std::cos(kernel_.delta * lx), -std::sin(kernel_.delta * lx));
    cplx phase(std::cos(t_.front() * lx), -std::sin(t_.front() * lx));
    kahan acc;
    double prev_t = t_.front();
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i > 0) {
        // tolerate gaps in the kept set (re-anchor with a fresh sincos)
        if (std::abs(t_[i] - prev_t - kernel_.delta) < 1e-12) {
          phase *= rot;
        } else {
          phase = cplx(std::cos(t_[i] * lx), -std::sin(t_[i] * lx));
        }
        prev_t = t_[i];
      }
      acc.add((w_[i] * phase).real());
    }
    out[u] = amp * acc.value();
  });
  return out;
}

double VKernel::envelope_constant(double c) const {
  const double half_t = kernel_.T;
  const double step = kernel_.delta;
  kahan acc;
  for (double t = -half_t; t <= half_t + 1e-12; t += step) {
    cplx s(c, t);
    cplx g1 = cgamma((0.5 + s + static_cast<double>(k1_)) / 2.0);
    cplx g2 = cgamma((0.5 + s + static_cast<double>(k2_)) / 2.0);
    acc.add(std::abs(g1 * g2 / norm_) * std::exp(c * c - t * t) / std::abs(s));
  }
  return acc.value() * step / (2.0 * std::numbers::pi);
}

VValue v_kernel(double x, int kappa1, int kappa2, const SmoothingKernel& kernel) {
  VKernel k(kappa1, kappa2, kernel);
  return k.eval(x);
}

cplx l_value_oracle(const cplx& s, const DirichletCharacter& chi, const HurwitzParams& params) {
  require(!chi.principal(), errc::principal_character, "l_value_oracle: principal character");
  const PrimePowerModulus& m = chi.modulus();
  const double q = static_cast<double>(m.q());
  ckahan acc;
  if (std::abs(s - cplx(1.0, 0.0)) <= 1e-12) {
    // at the joint Hurwitz pole the 1/(s-1) parts cancel (sum chi(a) = 0),
    // leaving L(1, chi) = -(1/q) sum chi(a) psi(a/q)
    for (std::uint64_t a = 1; a < m.q(); ++a) {
      if (!m.is_unit(a)) continue;
      acc.add(chi(a) * (-digamma(static_cast<double>(a) / q)));
    }
    return acc.value() / q;
  }
  for (std::uint64_t a = 1; a < m.q(); ++a) {
    if (!m.is_unit(a)) continue;
    acc.add(chi(a) * hurwitz_zeta(s, static_cast<double>(a) / q, params));
  }
  return acc.value() * std::exp(-s * std::log(q));
}

LValueTable::LValueTable(ModulusPtr mod, const cplx& s, const HurwitzParams& params)
    : mod_(std::move(mod)), s_(s) {
  const double q = static_cast<double>(mod_->q());
  qpow_ = std::exp(-s * std::log(q));
  zeta_.assign(mod_->q(), cplx(0.0, 0.0));
  for (std::uint64_t a = 1; a < mod_->q(); ++a) {
    if (!mod_->is_unit(a)) continue;
    zeta_[a] = hurwitz_zeta(s, static_cast<double>(a) / q, params);
  }
}

cplx LValueTable::value(const DirichletCharacter& chi) const {
  require(!chi.principal(), errc::principal_character, "LValueTable: principal character");
  require(chi.modulus().q() == mod_->q(), errc::bad_parameters, "LValueTable: modulus mismatch");
  ckahan acc;
  for (std::uint64_t a = 1; a < mod_->q(); ++a) {
    if (!mod_->is_unit(a)) continue;
    acc.add(chi(a) * zeta_[a]);
  }
  return acc.value() * qpow_;
}

AfeEvaluator::AfeEvaluator(ModulusPtr mod, const DirichletCharacter& eta1,
                           const DirichletCharacter& eta2, double X, double multiplier,
                           const SmoothingKernel& kernel, unsigned threads)
    : mod_(std::move(mod)), eta1_(eta1), eta2_(eta2), x_(X), mult_(multiplier), kernel_(kernel) {
  require(X > 0.0, errc::non_positive_argument, "AFE: X must be positive");
  require(multiplier > 0.0, errc::bad_parameters, "AFE: multiplier must be positive");
  require(eta1_.modulus().q() == mod_->q() && eta2_.modulus().q() == mod_->q(),
          errc::bad_parameters, "AFE: eta characters must live mod q");

  const double q = static_cast<double>(mod_->q());
  d1_ = static_cast<std::uint64_t>(multiplier * q * X / std::numbers::pi);
  d2_ = static_cast<std::uint64_t>(multiplier * q / (std::numbers::pi * X));
  require(d1_ >= 1 && d2_ >= 1, errc::bad_parameters, "AFE: cutoffs truncate to zero terms");

  invsqrt_.resize(std::max(d1_, d2_) + 1);
  invsqrt_[0] = 0.0;
  for (std::uint64_t u = 1; u < invsqrt_.size(); ++u)
    invsqrt_[u] = 1.0 / std::sqrt(static_cast<double>(u));

  // Both parity combinations reachable from this eta pair (chi parity flips both).
  const int p1 = eta1_.parity(), p2 = eta2_.parity();
  for (int chi_par : {0, 1}) {
    int kap1 = (chi_par + p1) % 2, kap2 = (chi_par + p2) % 2;
    if (tables_.count({kap1, kap2})) continue;
    VKernel vk(kap1, kap2, kernel_);
    SideTable s1, s2;
    s1.v = vk.table(q * X, d1_, threads);
    s2.v = vk.table(q / X, d2_, threads);
    // |V(x)| <= B4 x^-4 past the cutoff; sum_{u>D} d(u) u^(-1/2) |V(pi u/scale)|
    // <= 2 B4 (scale/pi)^4 sum_{u>D} u^-4 <= (2/3) B4 (scale/pi)^4 D^-3.
    const double b4 = vk.envelope_constant(4.0);
    auto tail = [&](double scale, std::uint64_t d) {
      double r = scale / std::numbers::pi;
      return (2.0 / 3.0) * b4 * r * r * r * r / (static_cast<double>(d) * d * d);
    };
    s1.tail_bound = tail(q * X, d1_);
    s2.tail_bound = tail(q / X, d2_);
    s1.quad_error = vk.eval(std::numbers::pi / (q * X)).quad_error;
    s2.quad_error = vk.eval(std::numbers::pi / (q / X)).quad_error;
    tables_.emplace(std::make_pair(kap1, kap2), std::make_pair(std::move(s1), std::move(s2)));
  }
}

const AfeEvaluator::SideTable& AfeEvaluator::side(int kappa1, int kappa2, bool first) const {
  auto it = tables_.find({kappa1, kappa2});
  require(it != tables_.end(), errc::bad_parameters, "AFE: missing parity table");
  return first ? it->second.first : it->second.second;
}

AfeResult AfeEvaluator::eval(const DirichletCharacter& chi) const {
  const PrimePowerModulus& m = *mod_;
  DirichletCharacter psi1 = chi.times(eta1_);
  DirichletCharacter psi2 = chi.times(eta2_);
  require(psi1.primitive() && psi2.primitive(), errc::bad_parameters,
          "AFE: chi*eta1 and chi*eta2 must be primitive");

  AfeResult out;
  out.kappa1 = psi1.parity();
  out.kappa2 = psi2.parity();
  out.X = x_;
  out.cutoff1 = d1_;
  out.cutoff2 = d2_;

  const SideTable& t1 = side(out.kappa1, out.kappa2, true);
  const SideTable& t2 = side(out.kappa1, out.kappa2, false);
  out.tail_bound = t1.tail_bound + t2.tail_bound;
  out.quad_error = std::max(t1.quad_error, t2.quad_error);

  const std::uint64_t qk = m.group_order();
  const std::uint64_t a1 = psi1.residue();
  const std::uint64_t a2c = (qk - psi2.residue()) % qk;  // conj(psi2)
  const std::uint64_t a1c = (qk - a1) % qk;
  const std::uint64_t a2 = psi2.residue();

  // first sum over mn <= D1 of psi1(m) conj(psi2)(n) V1(mn)/sqrt(mn)
  ckahan s1;
  std::uint64_t terms1 = 0;
  for (std::uint64_t mm = 1; mm <= d1_; ++mm) {
    std::uint32_t im = m.index(mm);
    if (im == PrimePowerModulus::npos) continue;
    cplx cm = m.unit_root(mul_mod(a1, im, qk));
    const std::uint64_t nmax = d1_ / mm;
    for (std::uint64_t nn = 1; nn <= nmax; ++nn) {
      std::uint32_t in = m.index(nn);
      if (in == PrimePowerModulus::npos) continue;
      cplx cn = m.unit_root(mul_mod(a2c, in, qk));
      s1.add(cm * cn * (invsqrt_[mm] * invsqrt_[nn] * t1.v[mm * nn]));
      ++terms1;
    }
  }

  // mirrored sum over mn <= D2 of conj(psi1)(m) psi2(n) V2(mn)/sqrt(mn)
  ckahan s2;
  std::uint64_t terms2 = 0;
  for (std::uint64_t mm = 1; mm <= d2_; ++mm) {
    std::uint32_t im = m.index(mm);
    if (im == PrimePowerModulus::npos) continue;
    cplx cm = m.unit_root(mul_mod(a1c, im, qk));
    const std::uint64_t nmax = d2_ / mm;
    for (std::uint64_t nn = 1; nn <= nmax; ++nn) {
      std::uint32_t in = m.index(nn);
      if (in == PrimePowerModulus::npos) continue;
      cplx cn = m.unit_root(mul_mod(a2, in, qk));
      s2.add(cm * cn * (invsqrt_[mm] * invsqrt_[nn] * t2.v[mm * nn]));
      ++terms2;
    }
  }

  out.first_sum = s1.value();
  out.second_sum = s2.value();
  out.terms1 = terms1;
  out.terms2 = terms2;
  out.eps1 = root_number(psi1);
  out.eps2 = root_number(psi2.conjugate());
  out.prefactor = ipow_neg(out.kappa1 + out.kappa2) * out.eps1 * out.eps2;
  out.total = out.first_sum + out.prefactor * out.second_sum;
  return out;
}

AfeResult afe_product(const AfeRequest& req) {
  AfeEvaluator ev(req.chi.modulus_ptr(), req.eta1, req.eta2, req.X, req.tail_cutoff_multiplier,
                  req.kernel, 1);
  return ev.eval(req.chi);
}

FunctionalEquationCheck functional_equation_check(const cplx& s, const DirichletCharacter& psi,
                                                  const HurwitzParams& params) {
  require(psi.primitive(), errc::bad_parameters, "functional equation: psi must be primitive");
  const double q = static_cast<double>(psi.modulus().q());
  const double kap = static_cast<double>(psi.parity());
  const cplx qpi = cplx(std::log(q / std::numbers::pi), 0.0);
  cplx left = std::exp(0.5 * s * qpi) * cgamma((0.5 + s + kap) / 2.0) *
              l_value_oracle(0.5 + s, psi, params);
  cplx right = ipow_neg(psi.parity()) * root_number(psi) * std::exp(-0.5 * s * qpi) *
               cgamma((0.5 - s + kap) / 2.0) * l_value_oracle(0.5 - s, psi.conjugate(), params);
  return {left, right, std::abs(left - right)};
}

}  // namespace orbitlf
