#include "orbitlf/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orbitlf/errors.hpp"

namespace orbitlf {

GaloisOrbit::GaloisOrbit(ModulusPtr m, OrbitKind kind, std::uint64_t c, int kappa,
                         std::vector<std::uint64_t> members)
    : mod_(std::move(m)), kind_(kind), c_(c), kappa_(kappa), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  base_ = members_.empty() ? 0 : members_.front();
  parity_ = members_.empty() ? 0 : static_cast<int>(members_.front() % 2);
  for (std::uint64_t a : members_) {
    require(static_cast<int>(a % 2) == parity_, errc::bad_parameters,
            "orbit members do not share a parity");
  }
}

GaloisOrbit GaloisOrbit::full_orbit(ModulusPtr m, std::uint64_t c) {
  const std::uint64_t qk = m->group_order();
  require(c >= 1 && (m->p() - 1) % c == 0, errc::not_a_divisor,
          "full_orbit: c must divide p - 1");
  std::vector<std::uint64_t> members;
  // a = c*b with gcd(b, q_k/c) = 1; equivalently gcd(a, q_k) = c, a != 0.
  for (std::uint64_t b = 1, lim = qk / c; b < lim; ++b) {
    if (std::gcd(b, lim) == 1) members.push_back(c * b);
  }
  if (c == qk) members.clear();  // k = 1, c = p-1: only candidate is the principal character
  return GaloisOrbit(std::move(m), OrbitKind::full, c, -1, std::move(members));
}

std::vector<GaloisOrbit> GaloisOrbit::thin_orbits(ModulusPtr m, int kappa,
                                                  const GaloisOrbit& parent) {
  require(kappa >= 0 && kappa <= m->k() - 1, errc::kappa_out_of_range,
          "thin_orbits: need 0 <= kappa <= k - 1");
  require(parent.kind() == OrbitKind::full && parent.modulus().q() == m->q(),
          errc::bad_parameters, "thin_orbits: parent must be a full orbit mod the same q");

  const std::uint64_t qk = m->group_order();
  // Subgroup multipliers: t = 1 mod phi(p^(k-kappa)), gcd(t, q_k) = 1.
  const std::uint64_t step = m->group_order_at_height(m->k() - kappa);
  std::vector<std::uint64_t> ts;
  for (std::uint64_t t = 1; t < qk; t += step) {
    if (std::gcd(t, qk) == 1) ts.push_back(t);
  }

  std::vector<GaloisOrbit> out;
  std::vector<std::uint64_t> sorted_parent = parent.members();  // already ascending
  std::vector<bool> visited(sorted_parent.size(), false);
  for (std::size_t i = 0; i < sorted_parent.size(); ++i) {
    if (visited[i]) continue;
    std::uint64_t base = sorted_parent[i];
    std::vector<std::uint64_t> members;
    for (std::uint64_t t : ts) {
      std::uint64_t a = mul_mod(t, base, qk);
      members.push_back(a);
      auto it = std::lower_bound(sorted_parent.begin(), sorted_parent.end(), a);
      require(it != sorted_parent.end() && *it == a, errc::bad_parameters,
              "thin orbit escaped its parent");
      visited[it - sorted_parent.begin()] = true;
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    out.push_back(GaloisOrbit(m, OrbitKind::thin, parent.characteristic(), kappa,
                              std::move(members)));
  }
  return out;
}

OrbitAverage orbit_average(const GaloisOrbit& orbit, std::uint64_t n) {
  const PrimePowerModulus& m = orbit.modulus();
  std::uint32_t iota = m.index(n);
  require(iota != PrimePowerModulus::npos, errc::not_coprime,
          "orbit_average: gcd(n, p) != 1");

  const std::uint64_t qk = m.group_order();
  OrbitAverage out;

  ckahan acc;
  for (std::uint64_t a : orbit.members()) acc.add(m.unit_root(mul_mod(a, iota, qk)));
  out.brute = acc.value() / static_cast<double>(orbit.size());

  if (orbit.kind() == OrbitKind::full) {
    // Ramanujan-sum identity: the average over {gcd(a, q_k) = c} is
    // mu(d)/phi(d) with d = (q_k/c)/gcd(iota, q_k/c), the order of n^c.
    const std::uint64_t Q = qk / orbit.characteristic();
    const std::uint64_t d = Q / std::gcd(static_cast<std::uint64_t>(iota), Q);
    out.has_closed_form = true;
    out.d = d;
    out.closed_num = mobius(d);
    out.closed_den = euler_phi(d);
    out.value = cplx(static_cast<double>(out.closed_num) / static_cast<double>(out.closed_den), 0.0);
  } else {
    out.value = out.brute;
  }
  return out;
}

int validate_eta_pair(const GaloisOrbit& orbit, const DirichletCharacter& eta1,
                      const DirichletCharacter& eta2) {
  const PrimePowerModulus& m = orbit.modulus();
  require(eta1.modulus().q() == m.q() && eta2.modulus().q() == m.q(), errc::bad_parameters,
          "eta characters must live mod the orbit's q");
  require(!(eta1 == eta2), errc::eta_equal, "eta1 and eta2 must differ");
  require(!eta1.primitive() && !eta2.primitive(), errc::eta_not_imprimitive,
          "eta1 and eta2 must be imprimitive");
  DirichletCharacter eta = eta1.times(eta2.conjugate());
  int h = eta.height();
  require(h > 0 && h < m.k(), errc::eta_not_imprimitive,
          "eta1 * conj(eta2) must have height strictly between 0 and k");
  return h;
}

EpsilonAverageTable::EpsilonAverageTable(const GaloisOrbit& orbit, const DirichletCharacter& eta1,
                                         const DirichletCharacter& eta2)
    : mod_(orbit.modulus_ptr()) {
  const PrimePowerModulus& m = *mod_;
  h_ = validate_eta_pair(orbit, eta1, eta2);
  kappa_ = orbit.kappa();
  require(!orbit.members().empty(), errc::bad_parameters, "epsilon average over an empty orbit");

  const std::uint64_t q = m.q(), qk = m.group_order(), p = m.p();
  const int k = m.k();

  // Vanishing criterion: nonzero only if n^(p-1) = 1 mod p^e with e = k - h
  // for full orbits and e = min(kappa + 1, k - h) for thin ones.
  vanish_exp_ = (orbit.kind() == OrbitKind::full) ? (k - h_) : std::min(kappa_ + 1, k - h_);

  term_norm_ = std::pow(static_cast<double>(p), static_cast<double>(k) - h_ / 2.0) /
               static_cast<double>(q);
  paper_bound_ =
      (orbit.kind() == OrbitKind::full)
          ? (p - 1) * std::pow(static_cast<double>(p), 1.0 - h_ / 2.0)
          : (p - 1) * std::pow(static_cast<double>(p),
                               static_cast<double>(k) - h_ / 2.0 - kappa_);

  // Route (a): per-member product of root numbers.
  const double sq = std::sqrt(static_cast<double>(q));
  std::vector<cplx> eps_prod(orbit.size());
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    DirichletCharacter chi = orbit.character(i);
    cplx e1 = gauss_sum(chi.times(eta1), 1) / sq;
    cplx e2 = gauss_sum(chi.times(eta2).conjugate(), 1) / sq;
    eps_prod[i] = e1 * e2;
  }

  // Route (b) ingredients: E_O over all units and the Gauss sums of
  // eta = eta1 * conj(eta2) at every shift.
  DirichletCharacter eta = eta1.times(eta2.conjugate());
  std::vector<cplx> eavg(q, cplx(0.0, 0.0));
  for (std::uint64_t u = 0; u < q; ++u) {
    if (!m.is_unit(u)) continue;
    OrbitAverage oa = orbit_average(orbit, u);
    eavg[u] = oa.value;
  }
  std::vector<cplx> cg(q);
  std::vector<bool> cg_support(q, false);
  for (std::uint64_t t = 0; t < q; ++t) {
    // Support of the imprimitive Gauss sum: ord_p(t) = k - h exactly.
    cg_support[t] = (padic_valuation(t, p) == k - h_);
    cg[t] = cg_support[t] ? gauss_sum(eta, t) : cplx(0.0, 0.0);
  }

  value_.assign(q, cplx(0.0, 0.0));
  route_a_.assign(q, cplx(0.0, 0.0));
  route_b_.assign(q, cplx(0.0, 0.0));
  surviving_.assign(q, 0);
  vanishes_.assign(q, false);
  max_disagreement_ = 0.0;

  const double inv_orbit = 1.0 / static_cast<double>(orbit.size());
  const double inv_q = 1.0 / static_cast<double>(q);
  const double ethr = 1e-9;  // thin-orbit averages vanish analytically; numerically ~1e-15

  for (std::uint64_t n = 0; n < q; ++n) {
    if (!m.is_unit(n)) continue;

    std::uint32_t iota = m.index(n);
    ckahan acc_a;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      acc_a.add(eps_prod[i] * m.unit_root(mul_mod(orbit.members()[i], iota, qk)));
    }
    cplx ra = acc_a.value() * inv_orbit;

    ckahan acc_b;
    std::uint32_t survivors = 0;
    for (std::uint64_t w = 0; w < q; ++w) {
      if (!m.is_unit(w)) continue;
      std::uint64_t shift = (w + 1) % q;
      if (!cg_support[shift]) continue;
      cplx e = eavg[mul_mod(n, w, q)];
      if (std::abs(e.real()) < ethr && std::abs(e.imag()) < ethr) continue;
      ++survivors;
      acc_b.add(eta1(w) * e * cg[shift]);
    }
    cplx rb = acc_b.value() * inv_q;

    max_disagreement_ = std::max(max_disagreement_, std::abs(ra - rb));
    require(std::abs(ra - rb) <= 1e-8,
            errc::bad_parameters, "epsilon-average routes disagree beyond 1e-8");

    bool vanish = (pow_mod(n, p - 1, m.p_pow(vanish_exp_)) != 1);
    if (vanish) {
      require(std::abs(ra) <= 1e-8, errc::bad_parameters,
              "vanishing criterion contradicted by the direct route");
    }

    route_a_[n] = ra;
    route_b_[n] = rb;
    surviving_[n] = survivors;
    vanishes_[n] = vanish;
    value_[n] = vanish ? cplx(0.0, 0.0) : ra;

    require(std::abs(ra) <= survivors * term_norm_ + 1e-9, errc::bad_parameters,
            "epsilon average exceeded its term-count bound");
  }
}

EpsilonAverage EpsilonAverageTable::at(std::uint64_t n) const {
  const PrimePowerModulus& m = *mod_;
  std::uint64_t r = n % m.q();
  require(m.is_unit(r), errc::not_coprime, "epsilon average at a non-unit");
  EpsilonAverage out;
  out.value = value_[r];
  out.route_direct = route_a_[r];
  out.route_wsum = route_b_[r];
  out.vanishes = vanishes_[r];
  out.surviving_terms = surviving_[r];
  out.term_count_bound = surviving_[r] * term_norm_;
  out.paper_bound = paper_bound_;
  return out;
}

EpsilonAverage epsilon_weighted_orbit_average(const GaloisOrbit& orbit,
                                              const DirichletCharacter& eta1,
                                              const DirichletCharacter& eta2, std::uint64_t n) {
  EpsilonAverageTable table(orbit, eta1, eta2);
  return table.at(n);
}

}  // namespace orbitlf
