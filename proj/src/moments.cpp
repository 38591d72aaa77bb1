#include "orbitlf/moments.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "orbitlf/errors.hpp"
#include "orbitlf/parallel.hpp"

namespace orbitlf {

namespace {

cplx ipow_neg(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

}  // namespace

TwistPair::TwistPair(std::uint64_t m1_in, std::uint64_t m2_in) : m1(m1_in), m2(m2_in) {
  require(m1 >= 1 && m2 >= 1, errc::bad_parameters, "twists must be positive");
  std::uint64_t g = std::gcd(m1, m2);
  m1p = m1 / g;
  m2p = m2 / g;
}

MomentEngine::MomentEngine(const GaloisOrbit& orbit, const DirichletCharacter& eta1,
                           const DirichletCharacter& eta2, const MomentOptions& opts)
    : orbit_(orbit),
      eta1_(eta1),
      eta2_(eta2),
      eta_(eta1.times(eta2.conjugate())),
      h_(validate_eta_pair(orbit, eta1, eta2)),
      opts_(opts),
      l_half_(orbit.modulus_ptr(), cplx(0.5, 0.0), opts.hurwitz),
      eps_(orbit, eta1, eta2) {
  const PrimePowerModulus& m = orbit_.modulus();
  require(!orbit_.members().empty(), errc::bad_parameters, "moment over an empty orbit");

  kappa1_ = (orbit_.parity() + eta1_.parity()) % 2;
  kappa2_ = (orbit_.parity() + eta2_.parity()) % 2;

  l_one_eta_ = l_value_oracle(cplx(1.0, 0.0), eta_, opts_.hurwitz);

  lprod_.assign(orbit_.size(), cplx(0.0, 0.0));
  parallel_for(orbit_.size(), resolve_threads(opts_.threads), [&](std::size_t i) {
    DirichletCharacter chi = orbit_.character(i);
    lprod_[i] = l_half_.value(chi.times(eta1_)) * l_half_.value(chi.times(eta2_).conjugate());
  });

  eavg_.assign(m.q(), cplx(0.0, 0.0));
  for (std::uint64_t u = 1; u < m.q(); ++u) {
    if (m.is_unit(u)) eavg_[u] = orbit_average(orbit_, u).value;
  }

  inv_.assign(m.q(), 0);
  for (std::uint64_t u = 1; u < m.q(); ++u) {
    if (m.is_unit(u)) inv_[u] = m.inverse(u);
  }
}

double MomentEngine::default_X() const {
  return std::pow(static_cast<double>(orbit_.modulus().p()), h_ / 2.0);
}

void MomentEngine::validate_pair(const TwistPair& pair) const {
  const std::uint64_t p = orbit_.modulus().p();
  require(pair.m1 % p != 0 && pair.m2 % p != 0, errc::twist_not_coprime,
          "twists must be coprime to p");
}

cplx MomentEngine::direct(const TwistPair& pair) const {
  validate_pair(pair);
  const PrimePowerModulus& m = orbit_.modulus();
  const std::uint64_t qk = m.group_order();
  const std::uint32_t i1 = m.index(pair.m1);
  const std::uint32_t i2 = m.index(pair.m2);
  // chi(m1) conj(chi)(m2) = e(a (iota(m1) - iota(m2)) / q_k)
  const std::uint64_t di = (static_cast<std::uint64_t>(i1) + qk - i2) % qk;
  ckahan acc;
  for (std::size_t i = 0; i < orbit_.size(); ++i) {
    acc.add(lprod_[i] * m.unit_root(mul_mod(orbit_.members()[i], di, qk)));
  }
  return acc.value() / static_cast<double>(orbit_.size());
}

MomentEngine::Tables& MomentEngine::tables_for(double X) {
  auto it = vtables_.find(X);
  if (it != vtables_.end()) return it->second;

  require(X > 0.0, errc::non_positive_argument, "moment AFE: X must be positive");
  const double q = static_cast<double>(orbit_.modulus().q());
  Tables t;
  t.d1 = static_cast<std::uint64_t>(opts_.multiplier * q * X / std::numbers::pi);
  t.d2 = static_cast<std::uint64_t>(opts_.multiplier * q / (std::numbers::pi * X));
  require(t.d1 >= 1 && t.d2 >= 1, errc::bad_parameters, "moment AFE: empty truncation range");
  VKernel vk(kappa1_, kappa2_, opts_.kernel);
  unsigned threads = resolve_threads(opts_.threads);
  t.v1 = vk.table(q * X, t.d1, threads);
  t.v2 = vk.table(q / X, t.d2, threads);
  return vtables_.emplace(X, std::move(t)).first->second;
}

MomentEngine::AfeMoment MomentEngine::afe(const TwistPair& pair, double X) {
  validate_pair(pair);
  const PrimePowerModulus& m = orbit_.modulus();
  const std::uint64_t q = m.q(), qk = m.group_order();
  const Tables& t = tables_for(X);

  const std::uint64_t e1 = eta1_.residue();
  const std::uint64_t e2c = (qk - eta2_.residue()) % qk;
  const std::uint64_t e1c = (qk - e1) % qk;
  const std::uint64_t e2 = eta2_.residue();

  const std::uint64_t m1r = pair.m1 % q;
  const std::uint64_t im2 = inv_[pair.m2 % q];

  AfeMoment out;
  out.cutoff1 = t.d1;
  out.cutoff2 = t.d2;

  // S_plus: sum over n1 n2 <= D1 of eta1(n1) conj(eta2)(n2)/sqrt(n1 n2)
  //         * V1(n1 n2) * E_O[m1 n1 inv(m2 n2)]
  ckahan sp;
  for (std::uint64_t n1 = 1; n1 <= t.d1; ++n1) {
    std::uint32_t j1 = m.index(n1);
    if (j1 == PrimePowerModulus::npos) continue;
    const cplx c1 = m.unit_root(mul_mod(e1, j1, qk));
    const double r1 = 1.0 / std::sqrt(static_cast<double>(n1));
    const std::uint64_t base = mul_mod(m1r, n1 % q, q);
    const std::uint64_t nmax = t.d1 / n1;
    for (std::uint64_t n2 = 1; n2 <= nmax; ++n2) {
      std::uint32_t j2 = m.index(n2);
      if (j2 == PrimePowerModulus::npos) continue;
      const cplx avg = eavg_[mul_mod(mul_mod(base, im2, q), inv_[n2 % q], q)];
      if (avg.real() == 0.0 && avg.imag() == 0.0) continue;
      const cplx c2 = m.unit_root(mul_mod(e2c, j2, qk));
      sp.add(c1 * c2 * avg * (r1 / std::sqrt(static_cast<double>(n2)) * t.v1[n1 * n2]));
    }
  }

  // S_minus: sum over n1 n2 <= D2 of conj(eta1)(n1) eta2(n2)/sqrt(n1 n2)
  //          * V2(n1 n2) * EW[m1 inv(m2) n2 inv(n1)]
  ckahan sm;
  bool any_nonzero = false;
  for (std::uint64_t n1 = 1; n1 <= t.d2; ++n1) {
    std::uint32_t j1 = m.index(n1);
    if (j1 == PrimePowerModulus::npos) continue;
    const cplx c1 = m.unit_root(mul_mod(e1c, j1, qk));
    const double r1 = 1.0 / std::sqrt(static_cast<double>(n1));
    const std::uint64_t base = mul_mod(mul_mod(m1r, im2, q), inv_[n1 % q], q);
    const std::uint64_t nmax = t.d2 / n1;
    for (std::uint64_t n2 = 1; n2 <= nmax; ++n2) {
      std::uint32_t j2 = m.index(n2);
      if (j2 == PrimePowerModulus::npos) continue;
      const cplx ew = eps_.value(mul_mod(base, n2 % q, q));
      if (ew.real() == 0.0 && ew.imag() == 0.0) continue;
      any_nonzero = true;
      const cplx c2 = m.unit_root(mul_mod(e2, j2, qk));
      sm.add(c1 * c2 * ew * (r1 / std::sqrt(static_cast<double>(n2)) * t.v2[n1 * n2]));
    }
  }

  out.s_plus = sp.value();
  out.s_minus = sm.value();
  out.s_minus_exactly_zero = !any_nonzero;
  out.total = out.s_plus + ipow_neg(kappa1_ + kappa2_) * out.s_minus;
  return out;
}

cplx MomentEngine::main_term(const TwistPair& pair) const {
  validate_pair(pair);
  require(!eta_.principal(), errc::eta_principal, "main term needs eta1 != eta2");
  const double rt = std::sqrt(static_cast<double>(pair.m1p) * static_cast<double>(pair.m2p));
  return eta1_(pair.m2p) * std::conj(eta2_(pair.m1p)) * l_one_eta_ / rt;
}

cplx MomentEngine::diagonal_term(const TwistPair& pair, double X) {
  validate_pair(pair);
  const PrimePowerModulus& m = orbit_.modulus();
  const Tables& t = tables_for(X);
  const std::uint64_t mm = pair.m1p * pair.m2p;
  ckahan acc;
  for (std::uint64_t n = 1; n * n * mm <= t.d1; ++n) {
    if (!m.is_unit(n)) continue;
    acc.add(eta_(n) * (t.v1[mm * n * n] / static_cast<double>(n)));
  }
  const double rt = std::sqrt(static_cast<double>(pair.m1p) * static_cast<double>(pair.m2p));
  return eta1_(pair.m2p) * std::conj(eta2_(pair.m1p)) * acc.value() / rt;
}

double MomentEngine::envelope(double theta) const {
  const double p = static_cast<double>(orbit_.modulus().p());
  const double q = static_cast<double>(orbit_.modulus().q());
  const double k = static_cast<double>(orbit_.modulus().k());
  const double h = static_cast<double>(h_);
  if (orbit_.kind() == OrbitKind::full) {
    return std::pow(p, h / 4.0) * std::pow(q, -0.5 + theta) +
           std::pow(p, -h / 4.0) * std::pow(q, -0.25);
  }
  const double kap = static_cast<double>(orbit_.kappa());
  return std::pow(p, h / 4.0 - kap) * std::pow(q, 0.5 + theta) + std::pow(p, -kap / 4.0) +
         std::pow(p, -kap + (3.0 * k - h) / 4.0);
}

cplx twisted_moment_direct(const GaloisOrbit& orbit, const DirichletCharacter& eta1,
                           const DirichletCharacter& eta2, const TwistPair& pair,
                           const MomentOptions& opts) {
  MomentEngine engine(orbit, eta1, eta2, opts);
  return engine.direct(pair);
}

MomentEngine::AfeMoment twisted_moment_afe(const GaloisOrbit& orbit,
                                           const DirichletCharacter& eta1,
                                           const DirichletCharacter& eta2, const TwistPair& pair,
                                           double X, const MomentOptions& opts) {
  MomentEngine engine(orbit, eta1, eta2, opts);
  return engine.afe(pair, X);
}

cplx main_term(const TwistPair& pair, const DirichletCharacter& eta1,
               const DirichletCharacter& eta2) {
  require(!(eta1.times(eta2.conjugate())).principal(), errc::eta_principal,
          "main term needs eta1 != eta2");
  const std::uint64_t p = eta1.modulus().p();
  require(pair.m1 % p != 0 && pair.m2 % p != 0, errc::twist_not_coprime,
          "twists must be coprime to p");
  cplx l1 = l_value_oracle(cplx(1.0, 0.0), eta1.times(eta2.conjugate()));
  const double rt = std::sqrt(static_cast<double>(pair.m1p) * static_cast<double>(pair.m2p));
  return eta1(pair.m2p) * std::conj(eta2(pair.m1p)) * l1 / rt;
}

cplx diagonal_term(const TwistPair& pair, const DirichletCharacter& eta1,
                   const DirichletCharacter& eta2, double X, const MomentOptions& opts) {
  // needs an orbit only for its parity; use the full orbit of characteristic 1
  GaloisOrbit orbit = GaloisOrbit::full_orbit(eta1.modulus_ptr(), 1);
  MomentEngine engine(orbit, eta1, eta2, opts);
  return engine.diagonal_term(pair, X);
}

MomentErrorSweep moment_error_sweep(const GaloisOrbit& orbit, const DirichletCharacter& eta1,
                                    const DirichletCharacter& eta2, double theta,
                                    const std::vector<double>& x, const MomentOptions& opts) {
  require(theta >= 0.0, errc::bad_parameters, "theta must be nonnegative");
  MomentEngine engine(orbit, eta1, eta2, opts);
  const std::uint64_t q = orbit.modulus().q();
  const std::uint64_t p = orbit.modulus().p();
  std::uint64_t limit =
      static_cast<std::uint64_t>(std::pow(static_cast<double>(q), theta));
  require(limit <= 64, errc::bad_parameters,
          "twist limit q^theta is beyond the desk-scale sweep budget (64)");

  MomentErrorSweep sweep;
  sweep.theta = theta;
  sweep.twist_limit = limit;

  auto coeff = [&](std::uint64_t mth) -> double {
    if (mth > x.size()) return mth <= limit ? 1.0 : 0.0;
    double v = x[mth - 1];
    require(std::abs(v) <= 2.0, errc::bad_parameters, "|x_m| must be <= 2");
    return v;
  };

  kahan re, im;
  for (std::uint64_t m1 = 1; m1 <= limit; ++m1) {
    if (m1 % p == 0) {
      ++sweep.skipped_multiples_of_p;
      continue;
    }
    for (std::uint64_t m2 = 1; m2 <= limit; ++m2) {
      if (m2 % p == 0) continue;
      TwistPair pair(m1, m2);
      MomentErrorRow row;
      row.m1 = m1;
      row.m2 = m2;
      row.direct = engine.direct(pair);
      row.main = engine.main_term(pair);
      row.error = row.direct - row.main;
      double w = coeff(m1) * coeff(m2) /
                 std::sqrt(static_cast<double>(m1) * static_cast<double>(m2));
      cplx term = w * row.error;
      re.add(term.real());
      im.add(term.imag());
      sweep.rows.push_back(row);
    }
  }
  sweep.bilinear_value = cplx(re.value(), im.value());
  sweep.envelope = engine.envelope(theta);
  sweep.ratio = std::abs(sweep.bilinear_value) / sweep.envelope;
  return sweep;
}

NonvanishingCount nonvanishing_count(const GaloisOrbit& orbit, const DirichletCharacter& eta1,
                                     const DirichletCharacter& eta2, double threshold,
                                     const MomentOptions& opts) {
  require(threshold > 0.0, errc::bad_parameters, "threshold must be positive");
  MomentEngine engine(orbit, eta1, eta2, opts);
  NonvanishingCount out;
  out.total = orbit.size();
  out.threshold = threshold;
  HurwitzParams refined{2 * opts.hurwitz.shift, std::min(12, opts.hurwitz.tail + 2)};
  LValueTable refined_table(orbit.modulus_ptr(), cplx(0.5, 0.0), refined);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    double mag = std::abs(engine.l_products()[i]);
    if (mag > threshold) {
      ++out.count;
      continue;
    }
    // re-evaluate at doubled precision before classifying
    DirichletCharacter chi = orbit.character(i);
    cplx rp = refined_table.value(chi.times(eta1)) *
              refined_table.value(chi.times(eta2).conjugate());
    if (std::abs(rp) > threshold) {
      ++out.count;
    } else {
      out.flagged.push_back({orbit.members()[i], std::abs(rp)});
    }
  }
  return out;
}

}  // namespace orbitlf
