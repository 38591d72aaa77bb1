#include "orbitlf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>

#include "orbitlf/congruence.hpp"
#include "orbitlf/errors.hpp"
#include "orbitlf/mollifier.hpp"
#include "orbitlf/moments.hpp"
#include "orbitlf/parallel.hpp"

namespace orbitlf::verify {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4g", x);
  return buf;
}

CheckResult done(const Timer& t, std::string name, bool pass, std::string detail) {
  return {std::move(name), pass, std::move(detail), t.ms()};
}

std::string tag(std::uint64_t p, int k, const char* check) {
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  return "q=" + std::to_string(q) + "/" + check;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Runs body() and converts a thrown orbitlf::error into a failed check.
template <class F>
CheckResult guarded(std::string name, F&& body) {
  Timer t;
  try {
    return body(t, std::move(name));
  } catch (const error& e) {
    return done(t, std::move(name), false, std::string("raised ") + e.what());
  }
}

}  // namespace

std::uint64_t eta_residue_for_height(std::uint64_t p, int k, int h) {
  std::uint64_t r = 1;
  for (int i = 0; i < k - h; ++i) r *= p;
  return r;
}

std::vector<CheckResult> partition_suite(std::uint64_t p, int k) {
  std::vector<CheckResult> out;
  ModulusPtr mod = build_modulus(p, k);
  const std::uint64_t qk = mod->group_order();
  const auto cs = divisors_of(p - 1);

  // Full orbits partition the primitive residues; sizes are phi(q_k / c) and
  // the parity is forced by the parity of c.
  out.push_back(guarded(tag(p, k, "orbit-partition"), [&](const Timer& t, std::string name) {
    std::vector<char> seen(qk, 0);
    std::uint64_t covered = 0;
    for (std::uint64_t c : cs) {
      GaloisOrbit orbit = GaloisOrbit::full_orbit(mod, c);
      std::uint64_t expected = (k == 1 && c == p - 1) ? 0 : euler_phi(qk / c);
      if (orbit.size() != expected)
        return done(t, name, false,
                    "c=" + std::to_string(c) + " size " + std::to_string(orbit.size()) +
                        " expected " + std::to_string(expected));
      std::uint64_t prev = 0;
      for (std::uint64_t a : orbit.members()) {
        if (a == 0 || a >= qk || std::gcd(a, qk) != c || seen[a])
          return done(t, name, false, "bad member a=" + std::to_string(a));
        if (a <= prev && prev != 0) return done(t, name, false, "members not ascending");
        prev = a;
        if (DirichletCharacter(mod, a).height() != k)
          return done(t, name, false, "imprimitive member a=" + std::to_string(a));
        seen[a] = 1;
        ++covered;
      }
      if (expected && orbit.parity() != static_cast<int>(c % 2))
        return done(t, name, false, "parity mismatch for c=" + std::to_string(c));
    }
    for (std::uint64_t a = 1; a < qk; ++a)
      if (a % p != 0 && !seen[a])
        return done(t, name, false, "primitive residue not covered: " + std::to_string(a));
    return done(t, name, true,
                std::to_string(cs.size()) + " characteristics, " + std::to_string(covered) +
                    " primitive characters covered once");
  }));

  // Thin orbits partition their parent with the forced subgroup size.
  out.push_back(guarded(tag(p, k, "thin-partition"), [&](const Timer& t, std::string name) {
    std::uint64_t orbits_checked = 0;
    for (std::uint64_t c : cs) {
      GaloisOrbit parent = GaloisOrbit::full_orbit(mod, c);
      if (parent.size() == 0) continue;
      for (int kappa = 0; kappa < k; ++kappa) {
        std::uint64_t gsize =
            (kappa == k - 1 && k >= 2) ? mod->group_order_at_height(k - 1) : mod->p_pow(kappa);
        auto thins = GaloisOrbit::thin_orbits(mod, kappa, parent);
        std::set<std::uint64_t> covered;
        std::uint64_t prev_base = 0;
        for (const GaloisOrbit& th : thins) {
          if (th.size() != gsize)
            return done(t, name, false,
                        "kappa=" + std::to_string(kappa) + " size " + std::to_string(th.size()) +
                            " expected " + std::to_string(gsize));
          if (th.kappa() != kappa || th.kind() != OrbitKind::thin ||
              th.characteristic() != c)
            return done(t, name, false, "thin orbit metadata mismatch");
          if (th.base_residue() != th.members().front() || th.base_residue() <= prev_base)
            return done(t, name, false, "thin bases not ascending minima");
          prev_base = th.base_residue();
          for (std::uint64_t a : th.members())
            if (!covered.insert(a).second)
              return done(t, name, false, "overlap at a=" + std::to_string(a));
          if (th.parity() != parent.parity())
            return done(t, name, false, "thin parity differs from parent");
          ++orbits_checked;
        }
        std::set<std::uint64_t> want(parent.members().begin(), parent.members().end());
        if (covered != want)
          return done(t, name, false, "thin union misses the parent, kappa=" + std::to_string(kappa));
      }
    }
    return done(t, name, true, std::to_string(orbits_checked) + " thin orbits partition checked");
  }));

  return out;
}

std::vector<CheckResult> exact_lemma_suite(std::uint64_t p, int k, unsigned threads) {
  threads = resolve_threads(threads);
  std::vector<CheckResult> out = partition_suite(p, k);
  ModulusPtr mod = build_modulus(p, k);
  const std::uint64_t q = mod->q();
  const std::uint64_t qk = mod->group_order();
  const auto cs = divisors_of(p - 1);

  // Closed-form orbit average vs the brute member sum, every unit twist.
  out.push_back(guarded(tag(p, k, "orbit-average-closed-form"),
                        [&](const Timer& t, std::string name) {
    double worst = 0.0;
    std::uint64_t evals = 0;
    for (std::uint64_t c : cs) {
      GaloisOrbit orbit = GaloisOrbit::full_orbit(mod, c);
      if (orbit.size() == 0) continue;
      for (std::uint64_t n = 1; n < q; ++n) {
        if (n % p == 0) continue;
        OrbitAverage avg = orbit_average(orbit, n);
        if (!avg.has_closed_form) return done(t, name, false, "closed form missing");
        cplx rational(static_cast<double>(avg.closed_num) / static_cast<double>(avg.closed_den),
                      0.0);
        worst = std::max(worst, std::abs(avg.value - avg.brute));
        worst = std::max(worst, std::abs(rational - avg.value));
        ++evals;
      }
      bool threw = false;
      try {
        orbit_average(orbit, p);
      } catch (const error& e) {
        threw = e.code() == errc::not_coprime;
      }
      if (!threw) return done(t, name, false, "non-unit twist accepted");
    }
    return done(t, name, worst <= 1e-10,
                std::to_string(evals) + " twists, max |closed - brute| = " + fmt(worst));
  }));

  // Thin averages reassemble the parent average weighted by orbit size.
  out.push_back(guarded(tag(p, k, "thin-average-reassembly"),
                        [&](const Timer& t, std::string name) {
    GaloisOrbit parent = GaloisOrbit::full_orbit(mod, 1);
    int kappa = k >= 2 ? k - 2 : 0;
    auto thins = GaloisOrbit::thin_orbits(mod, kappa, parent);
    double worst = 0.0;
    for (std::uint64_t n = 1; n < q; ++n) {
      if (n % p == 0) continue;
      ckahan acc;
      for (const GaloisOrbit& th : thins)
        acc.add(static_cast<double>(th.size()) * orbit_average(th, n).brute);
      cplx whole = static_cast<double>(parent.size()) * orbit_average(parent, n).brute;
      worst = std::max(worst, std::abs(acc.value() - whole));
    }
    return done(t, name, worst <= 1e-10,
                std::to_string(thins.size()) + " thin orbits at kappa=" + std::to_string(kappa) +
                    ", max reassembly defect = " + fmt(worst));
  }));

  // Gauss sums of imprimitive characters: support exactly at ord_p(n) = k-h,
  // magnitude p^(k - h/2) there, zero elsewhere.
  out.push_back(guarded(tag(p, k, "gauss-support-magnitude"),
                        [&](const Timer& t, std::string name) {
    std::vector<std::uint64_t> etas;
    for (std::uint64_t a = p; a < qk; a += p) etas.push_back(a);
    if (etas.empty())
      return done(t, name, true, "no imprimitive characters at k=1");
    std::vector<double> worst(etas.size(), 0.0);
    parallel_for(etas.size(), threads, [&](std::size_t i) {
      DirichletCharacter eta(mod, etas[i]);
      int h = eta.height();
      double on_mag = std::pow(static_cast<double>(p), k - 0.5 * h);
      double off_scale = std::sqrt(static_cast<double>(q));
      double w = 0.0;
      for (std::uint64_t n = 0; n < q; ++n) {
        double g = std::abs(gauss_sum(eta, n));
        bool on = n != 0 && padic_valuation(n, p) == k - h;
        if (on)
          w = std::max(w, std::abs(g - on_mag) / on_mag);
        else
          w = std::max(w, g / off_scale);
      }
      worst[i] = w;
    });
    double w = *std::max_element(worst.begin(), worst.end());
    return done(t, name, w <= 1e-6,
                std::to_string(etas.size()) + " imprimitive characters, max relative defect = " +
                    fmt(w));
  }));

  // Epsilon-weighted averages: two independent routes agree, the vanishing
  // criterion zeroes are exact, and the termwise bound holds.
  out.push_back(guarded(tag(p, k, "epsilon-two-route"), [&](const Timer& t, std::string name) {
    if (k < 2) return done(t, name, true, "no imprimitive eta pairs at k=1");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    std::uint64_t lo = eta_residue_for_height(p, k, k - 1);  // p
    std::uint64_t hi = eta_residue_for_height(p, k, 1);      // p^(k-1)
    if (lo != hi)
      pairs.push_back({lo, hi});
    else
      pairs.push_back({lo, 2 * lo});  // k = 2: two distinct height-1 characters
    if (k >= 3) pairs.push_back({2 * lo, hi});
    GaloisOrbit full = GaloisOrbit::full_orbit(mod, 1);
    auto thins = GaloisOrbit::thin_orbits(mod, k - 2 >= 0 ? k - 2 : 0, full);
    std::vector<const GaloisOrbit*> orbits{&full, &thins.front()};
    double worst = 0.0;
    std::uint64_t vanished = 0, total = 0;
    for (const GaloisOrbit* orbit : orbits) {
      for (auto [a1, a2] : pairs) {
        DirichletCharacter e1(mod, a1), e2(mod, a2);
        EpsilonAverageTable table(*orbit, e1, e2);  // ctor enforces the invariants
        worst = std::max(worst, table.max_route_disagreement());
        for (std::uint64_t n = 1; n < q; ++n) {
          if (n % p == 0) continue;
          EpsilonAverage ea = table.at(n);
          ++total;
          if (ea.vanishes) {
            ++vanished;
            if (ea.value != cplx(0.0, 0.0))
              return done(t, name, false, "vanishing criterion not exact at n=" + std::to_string(n));
          }
          if (std::abs(ea.value - ea.route_direct) > 1e-8)
            return done(t, name, false, "route mismatch at n=" + std::to_string(n));
          if (std::abs(ea.value) > ea.term_count_bound + 1e-9)
            return done(t, name, false, "termwise bound violated at n=" + std::to_string(n));
        }
      }
    }
    return done(t, name, worst <= 1e-8,
                std::to_string(total) + " twists (" + std::to_string(vanished) +
                    " exact zeros), max route disagreement = " + fmt(worst));
  }));

  // Teichmuller lifts: (p-1) distinct roots of x^(p-1) = 1 mod p^alpha, each
  // congruent to its seed mod p.
  out.push_back(guarded(tag(p, k, "teichmuller-roots"), [&](const Timer& t, std::string name) {
    for (int alpha = 1; alpha <= k; ++alpha) {
      std::uint64_t pa = 1;
      for (int i = 0; i < alpha; ++i) pa *= p;
      std::set<std::uint64_t> roots;
      for (std::uint64_t j = 1; j < p; ++j) {
        std::uint64_t z = teichmuller_lift(j, p, alpha);
        if (pow_mod(z, p - 1, pa) != 1 % pa || z % p != j)
          return done(t, name, false,
                      "lift of " + std::to_string(j) + " mod p^" + std::to_string(alpha));
        roots.insert(z);
      }
      if (roots.size() != p - 1)
        return done(t, name, false, "lifts collide at alpha=" + std::to_string(alpha));
    }
    return done(t, name, true, std::to_string(k) + " exponents, all lifts verified");
  }));

  return out;
}

CheckResult prime_power_lemma(std::uint64_t p, int alpha_max) {
  return guarded("p=" + std::to_string(p) + "/prime-power-lemma",
                 [&](const Timer& t, std::string name) {
    for (int alpha = 1; alpha <= alpha_max; ++alpha) {
      PrimePowerLemmaCheck chk = lemma_prime_power_check(p, alpha);
      std::uint64_t expected = alpha == 1 ? 1 : p;
      if (!chk.holds || chk.solutions != expected || chk.witnesses.size() != expected)
        return done(t, name, false, "alpha=" + std::to_string(alpha));
      std::uint64_t pa1 = 1;
      for (int i = 0; i + 1 < alpha; ++i) pa1 *= p;
      for (std::uint64_t w : chk.witnesses)
        if (w % pa1 != 1 % pa1)
          return done(t, name, false,
                      "witness " + std::to_string(w) + " not 1 mod p^" + std::to_string(alpha - 1));
    }
    return done(t, name, true, "alpha = 1.." + std::to_string(alpha_max) + " exhaustive");
  });
}

std::vector<CheckResult> congruence_box_suite(int boxes, std::uint64_t seed, double max_product) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  const std::uint64_t primes[3] = {3, 5, 7};

  std::uint64_t worst_box = 0;
  bool counts_ok = true, identity_ok = true, bound_ok = true, geometry_ok = true;
  std::string counts_bad, identity_bad, bound_bad, geometry_bad;
  Timer t_all;

  for (int i = 0; i < boxes; ++i) {
    DyadicBox box;
    box.p = primes[rng() % 3];
    box.alpha = static_cast<int>(rng() % 8) + 1;
    std::uint64_t A = rng() % 1000 + 1;
    std::uint64_t maxB = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(max_product) / A);
    std::uint64_t B = rng() % std::min<std::uint64_t>(1000, maxB) + 1;
    box.A = static_cast<double>(A);
    box.B = static_cast<double>(B);

    CongruenceCountReport rep = count_congruence(box);
    std::uint64_t pa = 1;
    for (int e = 0; e < box.alpha; ++e) pa *= box.p;

    // brute force: residue powers once per element, then all pairs
    std::vector<std::uint64_t> av, bv, apow, bpow;
    for (std::uint64_t a = A; a < 2 * A; ++a)
      if (a % box.p != 0) av.push_back(a), apow.push_back(pow_mod(a % pa, box.p - 1, pa));
    for (std::uint64_t b = B; b < 2 * B; ++b)
      if (b % box.p != 0) bv.push_back(b), bpow.push_back(pow_mod(b % pa, box.p - 1, pa));
    std::uint64_t d0 = 0, d1 = 0;
    for (std::size_t x = 0; x < av.size(); ++x)
      for (std::size_t y = 0; y < bv.size(); ++y) {
        std::uint64_t a = av[x], b = bv[y];
        if (a == b) continue;
        if (apow[x] != bpow[y]) continue;
        ++d0;
        bool plus = (a % pa) == (b % pa);
        bool minus = (a + b) % pa == 0;
        if (plus || minus) ++d1;
        if (minus && std::max(a, b) + std::min(a, b) < pa) {
          geometry_ok = false;
          geometry_bad = "a=" + std::to_string(a) + " b=" + std::to_string(b);
        }
      }
    if (rep.d0_raw != d0 || rep.d1_raw != d1 || rep.d2_raw != d0 - d1) {
      counts_ok = false;
      counts_bad = "box " + std::to_string(i) + ": got (" + std::to_string(rep.d0_raw) + "," +
                   std::to_string(rep.d1_raw) + "," + std::to_string(rep.d2_raw) + ") brute (" +
                   std::to_string(d0) + "," + std::to_string(d1) + "," + std::to_string(d0 - d1) +
                   ")";
    }
    std::uint64_t zeta_sum = 0;
    for (std::uint64_t c : rep.per_zeta) zeta_sum += c;
    if (rep.d0_raw != rep.d1_raw + rep.d2_raw || zeta_sum != rep.d0_raw) {
      identity_ok = false;
      identity_bad = "box " + std::to_string(i);
    }
    NaiveBoundCheck nb = naive_bound_check(box);
    if (!nb.ok) {
      bound_ok = false;
      bound_bad = "box " + std::to_string(i) + " margin " + fmt(nb.margin);
    }
    worst_box = std::max(worst_box, rep.d0_raw);
  }

  std::string suffix = std::to_string(boxes) + " boxes, max D0 = " + std::to_string(worst_box);
  out.push_back({"congruence/teichmuller-vs-brute", counts_ok,
                 counts_ok ? suffix : counts_bad, t_all.ms()});
  out.push_back({"congruence/d0-identity", identity_ok,
                 identity_ok ? "D0 = D1 + D2 and per-zeta split, " + suffix : identity_bad, 0.0});
  out.push_back({"congruence/naive-bound", bound_ok,
                 bound_ok ? "(p-1) min(A,B)(max(A,B)/p^a + 1) respected" : bound_bad, 0.0});
  out.push_back({"congruence/d1-geometry", geometry_ok,
                 geometry_ok ? "a = -b pairs satisfy max + min >= p^alpha" : geometry_bad, 0.0});
  return out;
}

CheckResult afe_oracle_check(std::uint64_t p, int k, int h1, int h2, double X, double tol,
                             std::size_t max_chars, double multiplier, unsigned threads) {
  threads = resolve_threads(threads);
  std::string name = tag(p, k, "afe-vs-oracle") + "(h1=" + std::to_string(h1) +
                     ",h2=" + std::to_string(h2) + ",X=" + fmt(X) + ")";
  return guarded(name, [&](const Timer& t, std::string nm) {
    ModulusPtr mod = build_modulus(p, k);
    DirichletCharacter eta1(mod, eta_residue_for_height(p, k, h1));
    std::uint64_t a2 = eta_residue_for_height(p, k, h2);
    if (a2 == eta1.residue()) a2 *= 2;
    DirichletCharacter eta2(mod, a2);

    std::vector<std::uint64_t> prim;
    for (std::uint64_t a = 1; a < mod->group_order(); ++a)
      if (a % p != 0) prim.push_back(a);
    if (max_chars && prim.size() > max_chars) {
      std::vector<std::uint64_t> sampled;
      std::size_t step = prim.size() / max_chars;
      for (std::size_t i = 0; i < prim.size(); i += step) sampled.push_back(prim[i]);
      prim.swap(sampled);
    }

    AfeEvaluator afe(mod, eta1, eta2, X, multiplier, SmoothingKernel{}, threads);
    LValueTable half(mod, cplx(0.5, 0.0));
    std::vector<double> defect(prim.size(), 0.0);
    parallel_for(prim.size(), threads, [&](std::size_t i) {
      DirichletCharacter chi(mod, prim[i]);
      cplx oracle = half.value(chi.times(eta1)) * half.value(chi.times(eta2).conjugate());
      defect[i] = std::abs(afe.eval(chi).total - oracle);
    });
    double worst = *std::max_element(defect.begin(), defect.end());
    return done(t, nm, worst <= tol,
                std::to_string(prim.size()) + " characters, max |afe - oracle| = " + fmt(worst) +
                    " (tol " + fmt(tol) + ")");
  });
}

std::vector<CheckResult> moment_afe_suite(std::uint64_t p, int k, unsigned threads) {
  threads = resolve_threads(threads);
  std::vector<CheckResult> out;
  if (k < 3) return out;  // needs two distinct imprimitive heights

  ModulusPtr mod = build_modulus(p, k);
  DirichletCharacter eta1(mod, eta_residue_for_height(p, k, k - 1));
  DirichletCharacter eta2(mod, eta_residue_for_height(p, k, 1));
  MomentOptions opts;
  opts.threads = threads;

  out.push_back(guarded(tag(p, k, "moment-direct-vs-afe"), [&](const Timer& t, std::string name) {
    GaloisOrbit orbit = GaloisOrbit::full_orbit(mod, 1);
    MomentEngine engine(orbit, eta1, eta2, opts);
    double worst = 0.0;
    for (TwistPair pair : {TwistPair(1, 1), TwistPair(2, 1), TwistPair(4, 2)}) {
      cplx direct = engine.direct(pair);
      for (double X : {1.0, engine.default_X()}) {
        worst = std::max(worst, std::abs(engine.afe(pair, X).total - direct));
      }
    }
    return done(t, name, worst <= 1e-6, "3 twist pairs x 2 scales, max defect = " + fmt(worst));
  }));

  out.push_back(guarded(tag(p, k, "moment-thin-reassembly"),
                        [&](const Timer& t, std::string name) {
    GaloisOrbit parent = GaloisOrbit::full_orbit(mod, 1);
    MomentEngine whole(parent, eta1, eta2, opts);
    TwistPair pair(2, 1);
    cplx want = static_cast<double>(parent.size()) * whole.direct(pair);
    double afe_worst = 0.0;
    ckahan acc;
    for (const GaloisOrbit& th : GaloisOrbit::thin_orbits(mod, k - 2, parent)) {
      MomentEngine part(th, eta1, eta2, opts);
      cplx d = part.direct(pair);
      acc.add(static_cast<double>(th.size()) * d);
      afe_worst = std::max(afe_worst, std::abs(part.afe(pair, 1.0).total - d));
    }
    double defect = std::abs(acc.value() - want) / static_cast<double>(parent.size());
    bool ok = defect <= 1e-10 && afe_worst <= 1e-6;
    return done(t, name, ok,
                "reassembly defect = " + fmt(defect) + ", thin AFE defect = " + fmt(afe_worst));
  }));

  // Flip the sign of the dual sum: the comparison must notice. Guards against
  // the direct/AFE agreement degenerating into a tautology.
  out.push_back(guarded(tag(p, k, "moment-sign-flip-detected"),
                        [&](const Timer& t, std::string name) {
    GaloisOrbit orbit = GaloisOrbit::full_orbit(mod, 1);
    MomentEngine engine(orbit, eta1, eta2, opts);
    TwistPair pair(1, 1);
    cplx direct = engine.direct(pair);
    MomentEngine::AfeMoment m = engine.afe(pair, 1.0);
    cplx flipped = 2.0 * m.s_plus - m.total;  // S+ - i^-(k1+k2) S-
    double honest = std::abs(m.total - direct);
    double broken = std::abs(flipped - direct);
    bool ok = honest <= 1e-6 && broken > 1e-6 && broken > 10.0 * honest;
    return done(t, name, ok,
                "honest defect = " + fmt(honest) + ", flipped defect = " + fmt(broken) +
                    ", |S-| = " + fmt(std::abs(m.s_minus)));
  }));

  return out;
}

std::vector<CheckResult> mollifier_suite(std::uint64_t p, int k) {
  std::vector<CheckResult> out;
  ModulusPtr mod = build_modulus(p, k);
  const std::uint64_t q = mod->q();
  MollifierParams params = MollifierParams::desk_mode(q, 4, {0.15, 0.35}, {4, 4});

  std::vector<std::uint64_t> prim;
  for (std::uint64_t a = 1; a < mod->group_order(); ++a)
    if (a % p != 0) prim.push_back(a);

  out.push_back(guarded(tag(p, k, "mollifier-two-route"), [&](const Timer& t, std::string name) {
    double worst = 0.0;
    for (std::uint64_t a : prim) {
      DirichletCharacter chi(mod, a);
      for (int j = 0; j <= params.K(); ++j) {
        MollifierPiece piece = mollifier_piece(chi, j, params);
        worst = std::max(worst, std::abs(piece.exp_route - piece.divisor_route));
      }
    }
    return done(t, name, worst <= 1e-12,
                std::to_string(prim.size()) + " characters x " + std::to_string(params.K() + 1) +
                    " intervals, max route gap = " + fmt(worst));
  }));

  out.push_back(guarded(tag(p, k, "mollifier-power-identity"),
                        [&](const Timer& t, std::string name) {
    double worst = 0.0;
    for (std::size_t i = 0; i < std::min<std::size_t>(prim.size(), 4); ++i) {
      DirichletCharacter chi(mod, prim[i]);
      MollifierPowerCheck chk = mollifier_power_check(chi, params.K(), 2, params);
      worst = std::max(worst, std::abs(chk.direct_power - chk.nu_route));
    }
    return done(t, name, worst <= 1e-10, "v = 2, max |direct - nu route| = " + fmt(worst));
  }));

  out.push_back(guarded(tag(p, k, "truncated-exp-grid"), [&](const Timer& t, std::string name) {
    double worst = 0.0;
    for (int ell = 2; ell <= 20; ell += 2) {
      double r = ell / std::exp(2.0);
      for (int i = 0; i <= 400; ++i) {
        double x = -r + 2.0 * r * i / 400.0;
        double e = truncated_exp(x, ell, true);
        double slack = (1.0 + std::exp(-0.5 * ell)) * e - std::exp(x);
        worst = std::min(worst, slack);
        if (slack < 0)
          return done(t, name, false, "ell=" + std::to_string(ell) + " x=" + fmt(x));
      }
    }
    return done(t, name, true, "ell = 2..20 even, 401-point grids, min slack >= 0");
  }));

  out.push_back(guarded(tag(p, k, "trichotomy"), [&](const Timer& t, std::string name) {
    std::uint64_t n_out = 0, n_all = 0, n_mid = 0;
    for (std::uint64_t a : prim) {
      DirichletCharacter chi(mod, a);
      MainPropCase mc = main_prop_case(chi, params);
      bool in0 = t_r_membership(chi, 0, params).in_t_r;
      switch (mc.kind) {
        case PropCase::not_in_t0:
          if (in0) return done(t, name, false, "a=" + std::to_string(a));
          ++n_out;
          break;
        case PropCase::in_all_t_r: {
          bool all = true;
          for (int r = 0; r <= params.K(); ++r)
            all = all && t_r_membership(chi, r, params).in_t_r;
          if (!all) return done(t, name, false, "a=" + std::to_string(a));
          ++n_all;
          break;
        }
        case PropCase::first_failure_at: {
          if (!in0 || mc.first_failure < 1 || mc.first_failure > params.K())
            return done(t, name, false, "a=" + std::to_string(a));
          for (int r = 0; r < mc.first_failure; ++r)
            if (!t_r_membership(chi, r, params).in_t_r)
              return done(t, name, false, "a=" + std::to_string(a));
          if (t_r_membership(chi, mc.first_failure, params).in_t_r)
            return done(t, name, false, "a=" + std::to_string(a));
          ++n_mid;
          break;
        }
      }
    }
    return done(t, name, n_out + n_all + n_mid == prim.size(),
                "not-in-T0: " + std::to_string(n_out) + ", in-all: " + std::to_string(n_all) +
                    ", first-failure: " + std::to_string(n_mid));
  }));

  out.push_back(guarded(tag(p, k, "paper-mode-gates"), [&](const Timer& t, std::string name) {
    double cb = MollifierParams::c_bound(4);
    bool rejected_large = false, rejected_odd = false;
    try {
      MollifierParams::paper_mode(q, 4, cb * 1.01);
    } catch (const error& e) {
      rejected_large = e.code() == errc::bad_parameters;
    }
    try {
      MollifierParams::paper_mode(q, 4, 7e-6);  // ell = 2601, odd
    } catch (const error& e) {
      rejected_odd = e.code() == errc::odd_ell;
    }
    MollifierParams paper = MollifierParams::paper_mode(q, 4, 1e-6);
    bool empty = paper.K() == 0 && paper.interval_primes(0).empty();
    cplx m = mollifier(DirichletCharacter(mod, prim.front()), paper);
    bool unit = std::abs(m - cplx(1.0, 0.0)) == 0.0;
    bool ok = rejected_large && rejected_odd && empty && unit;
    return done(t, name, ok,
                "c-bound reject: " + std::to_string(rejected_large) +
                    ", odd-ell reject: " + std::to_string(rejected_odd) +
                    ", desk-q intervals empty: " + std::to_string(empty) +
                    ", M = 1 exactly: " + std::to_string(unit));
  }));

  return out;
}

CheckResult holder_chain_check(std::uint64_t p, int k, unsigned threads) {
  threads = resolve_threads(threads);
  return guarded(tag(p, k, "holder-chain"), [&](const Timer& t, std::string name) {
    ModulusPtr mod = build_modulus(p, k);
    GaloisOrbit orbit = GaloisOrbit::full_orbit(mod, 1);
    DirichletCharacter eta1(mod, eta_residue_for_height(p, k, k - 1));
    DirichletCharacter eta2(mod, eta_residue_for_height(p, k, 1));
    MollifierParams params = MollifierParams::desk_mode(mod->q(), 4, {0.15, 0.35}, {4, 4});
    MomentOptions opts;
    opts.threads = threads;
    HolderLowerBound hb = holder_lower_bound(orbit, eta1, eta2, params, opts);
    bool ok = hb.chain_ok && hb.lower_bound_count <= static_cast<double>(hb.nonvanishing) + 1e-9 &&
              hb.lower_bound_proportion <= 1.0 + 1e-12 && hb.nonvanishing <= hb.orbit_size;
    return done(t, name, ok,
                "N = " + std::to_string(hb.nonvanishing) + "/" + std::to_string(hb.orbit_size) +
                    ", lower bound = " + fmt(hb.lower_bound_count) +
                    ", chain slack = " + fmt(hb.chain_slack));
  });
}

std::vector<CheckResult> ladder_entry_suite(std::uint64_t p, int k, std::uint64_t seed,
                                            unsigned threads) {
  (void)seed;
  std::vector<CheckResult> out = exact_lemma_suite(p, k, threads);
  int alpha_max = 1;
  std::uint64_t pa = p;
  while (pa <= 6561 / p) {
    pa *= p;
    ++alpha_max;
  }
  out.push_back(prime_power_lemma(p, alpha_max));
  if (k >= 3) {
    out.push_back(afe_oracle_check(p, k, std::min(2, k - 1), 1, 1.0, 1e-6, 12,
                                   kAfeDefaultMultiplier, threads));
    auto moments = moment_afe_suite(p, k, threads);
    out.insert(out.end(), moments.begin(), moments.end());
    auto moll = mollifier_suite(p, k);
    out.insert(out.end(), moll.begin(), moll.end());
    out.push_back(holder_chain_check(p, k, threads));
  }
  return out;
}

}  // namespace orbitlf::verify
