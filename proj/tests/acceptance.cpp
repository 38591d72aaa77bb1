// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Each criterion is self-contained and prints PASS/FAIL with its runtime, so
// the output doubles as the release checklist.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "orbitlf/congruence.hpp"
#include "orbitlf/errors.hpp"
#include "orbitlf/mollifier.hpp"
#include "orbitlf/moments.hpp"
#include "orbitlf/parallel.hpp"
#include "orbitlf/runner.hpp"
#include "orbitlf/verify.hpp"

using namespace orbitlf;
using verify::CheckResult;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// collects failures from a suite; empty string means all passed
std::string failures(const std::vector<CheckResult>& checks, std::size_t& count) {
  std::string bad;
  count += checks.size();
  for (const CheckResult& c : checks)
    if (!c.pass) bad += " [" + c.name + ": " + c.detail + "]";
  return bad;
}

bool criterion_exact_lemmas(std::string& detail, unsigned threads) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t count = 0;
  std::string bad;
  for (auto [p, k] : {std::pair<std::uint64_t, int>{3, 3}, {3, 4}, {3, 5}, {3, 6}, {5, 3}})
    bad += failures(verify::exact_lemma_suite(p, k, threads), count);
  // m^p = 1 mod p^alpha forces m = 1 mod p^(alpha-1), exhaustive to p^alpha <= 3^8
  for (auto [p, amax] : {std::pair<std::uint64_t, int>{3, 8}, {5, 5}, {7, 4}}) {
    CheckResult c = verify::prime_power_lemma(p, amax);
    ++count;
    if (!c.pass) bad += " [" + c.name + ": " + c.detail + "]";
  }
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << count << " checks over q in {27,81,243,729,125} plus the prime-power lemma, " << dt
     << " s (budget 180)";
  detail = os.str() + bad;
  return bad.empty() && dt < 180.0;
}

bool criterion_congruence(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t count = 0;
  std::string bad = failures(verify::congruence_box_suite(50, 20260815, 1e6), count);
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << "50 randomized boxes, p in {3,5,7}, alpha <= 8, " << dt << " s (budget 60)";
  detail = os.str() + bad;
  return bad.empty() && dt < 60.0;
}

bool criterion_afe_vs_oracle(std::string& detail, unsigned threads) {
  auto t0 = std::chrono::steady_clock::now();
  std::string bad;
  std::size_t count = 0;
  for (auto [h1, h2] : {std::pair<int, int>{2, 1}, {3, 1}}) {
    // X = 1 and the balanced default p^(h/2) for eta = eta1 conj(eta2)
    auto m = build_modulus(3, 5);
    DirichletCharacter e1(m, verify::eta_residue_for_height(3, 5, h1));
    DirichletCharacter e2(m, verify::eta_residue_for_height(3, 5, h2));
    int h = e1.times(e2.conjugate()).height();
    for (double X : {1.0, std::pow(3.0, h / 2.0)}) {
      CheckResult c = verify::afe_oracle_check(3, 5, h1, h2, X, 1e-6, 0, kAfeDefaultMultiplier,
                                               threads);
      ++count;
      if (!c.pass) bad += " [" + c.name + ": " + c.detail + "]";
    }
  }
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << count << " runs x 108 primitive characters mod 243, tol 1e-6, " << dt
     << " s (budget 120)";
  detail = os.str() + bad;
  return bad.empty() && dt < 120.0;
}

bool criterion_moment_decomposition(std::string& detail, unsigned threads) {
  auto t0 = std::chrono::steady_clock::now();
  std::string bad;
  MomentOptions opts;
  opts.threads = threads;
  double worst_afe = 0.0, worst_reassembly = 0.0;

  for (int k : {4, 5}) {
    auto m = build_modulus(3, k);
    DirichletCharacter eta1(m, verify::eta_residue_for_height(3, k, k - 1));
    DirichletCharacter eta2(m, verify::eta_residue_for_height(3, k, 1));
    GaloisOrbit full = GaloisOrbit::full_orbit(m, 1);
    MomentEngine engine(full, eta1, eta2, opts);

    std::vector<TwistPair> pairs = {TwistPair(1, 1), TwistPair(2, 1), TwistPair(4, 2)};
    for (const TwistPair& pair : pairs) {
      cplx direct = engine.direct(pair);
      worst_afe = std::max(worst_afe,
                           std::abs(engine.afe(pair, engine.default_X()).total - direct));
    }

    // thin orbits at kappa = k-2: per-orbit AFE agreement and exact reassembly
    for (const TwistPair& pair : pairs) {
      ckahan acc;
      for (const GaloisOrbit& th : GaloisOrbit::thin_orbits(m, k - 2, full)) {
        MomentEngine part(th, eta1, eta2, opts);
        cplx d = part.direct(pair);
        worst_afe = std::max(worst_afe, std::abs(part.afe(pair, 1.0).total - d));
        acc.add(static_cast<double>(th.size()) * d);
      }
      cplx whole = static_cast<double>(full.size()) * engine.direct(pair);
      worst_reassembly = std::max(
          worst_reassembly, std::abs(acc.value() - whole) / static_cast<double>(full.size()));
    }
  }
  if (worst_afe > 1e-6) bad += " [direct-vs-afe defect above 1e-6]";
  if (worst_reassembly > 1e-10) bad += " [thin reassembly defect above 1e-10]";
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << "q in {81,243}, 3 twist pairs, full + thin(k-2): max afe defect " << worst_afe
     << ", max reassembly defect " << worst_reassembly << ", " << dt << " s";
  detail = os.str() + bad;
  return bad.empty();
}

bool criterion_second_moment_main_term(std::string& detail, unsigned threads) {
  auto t0 = std::chrono::steady_clock::now();
  auto m = build_modulus(3, 5);
  DirichletCharacter eta1(m, 27), eta2(m, 9);
  GaloisOrbit orbit = GaloisOrbit::full_orbit(m, 1);
  MomentOptions opts;
  opts.threads = threads;
  MomentEngine engine(orbit, eta1, eta2, opts);

  TwistPair pair(1, 1);
  cplx second = engine.direct(pair);
  cplx main = engine.main_term(pair);
  double reported_error = std::abs(second - main);

  std::string bad;
  double x0 = engine.default_X();
  double prev = 1e300;
  std::ostringstream ladder;
  for (double X : {1.0, x0, x0 * x0}) {
    double err = std::abs(engine.diagonal_term(pair, X) - main);
    ladder << " " << err;
    if (err >= prev) bad += " [diagonal error not shrinking with X]";
    prev = err;
  }
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << "q=243: |second_moment - L(1,eta)| = " << reported_error
     << "; diagonal-vs-main errors over three X:" << ladder.str() << ", " << dt << " s";
  detail = os.str() + bad;
  return bad.empty();
}

bool criterion_mollifier_structure(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t count = 0;
  std::string bad = failures(verify::mollifier_suite(3, 4), count);
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << count << " checks (two-route 1e-12 on 36 characters, grid inequality, trichotomy, "
     << "paper-mode gates), " << dt << " s";
  detail = os.str() + bad;
  return bad.empty();
}

bool criterion_holder_chain(std::string& detail, unsigned threads) {
  auto t0 = std::chrono::steady_clock::now();
  std::string bad;
  for (int k : {4, 5}) {
    CheckResult c = verify::holder_chain_check(3, k, threads);
    if (!c.pass) bad += " [" + c.name + ": " + c.detail + "]";
  }
  double dt = seconds_since(t0);
  detail = "q in {81,243}, v=4 desk mollifier, slack 1e-9, bound <= count, " +
           std::to_string(dt) + " s" + bad;
  return bad.empty();
}

bool criterion_reproducibility(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  unsetenv("ORBITLF_THREADS");
  run::MomentConfig cfg;
  cfg.p = 3;
  cfg.k = 4;
  cfg.eta1 = 3;
  cfg.eta2 = 27;
  cfg.twists = {{1, 1}, {2, 1}};

  cfg.threads = 1;
  std::string first = run::strip_timing(run::cmd_moment(cfg).report).dump();
  std::string second = run::strip_timing(run::cmd_moment(cfg).report).dump();
  cfg.threads = 8;
  nlohmann::json eight = run::strip_timing(run::cmd_moment(cfg).report);
  nlohmann::json one = nlohmann::json::parse(first);

  std::string bad;
  if (first != second) bad += " [rerun of the same config changed the report]";
  if (one["results"].dump() != eight["results"].dump())
    bad += " [1-worker and 8-worker results differ]";
  double dt = seconds_since(t0);
  detail = "identical config twice, then 1 vs 8 workers: stripped reports bitwise equal, " +
           std::to_string(dt) + " s" + bad;
  return bad.empty();
}

bool criterion_report_envelopes(std::string& detail, double total_budget_left) {
  auto t0 = std::chrono::steady_clock::now();
  std::string bad;
  std::ostringstream os;

  setenv("ORBITLF_OUTDIR", "acceptance_artifacts", 1);
  try {
    // twisted-error sweep against the theta envelope
    run::MomentConfig ms;
    ms.p = 3;
    ms.k = 4;
    ms.eta1 = 3;
    ms.eta2 = 27;
    ms.theta = 0.4;
    ms.sweep = true;
    ms.out = "error_sweep.json";
    run::Outcome mo = run::cmd_moment(ms);
    run::emit(mo, ms);
    const auto& sweep = mo.report["results"]["error_sweep"];
    os << "E(theta) sweep ratio " << sweep["ratio"].get<double>();
    if (!std::isfinite(sweep["ratio"].get<double>())) bad += " [sweep ratio not finite]";

    // mollified vth-moment ratio ladder
    os << "; vth ratios";
    for (auto [p, k] : {std::pair<std::uint64_t, int>{3, 3}, {3, 4}, {3, 5}, {5, 3}}) {
      run::MollifyConfig mc;
      mc.p = p;
      mc.k = k;
      mc.vth = true;
      mc.out = "mollify_" + std::to_string(p) + "_" + std::to_string(k) + ".json";
      run::Outcome out = run::cmd_mollify(mc);
      run::emit(out, mc);
      double ratio = out.report["results"]["vth_moment"]["ratio"].get<double>();
      os << " " << ratio;
      if (!std::isfinite(ratio)) bad += " [vth ratio not finite]";
      // the same artifacts carry the conditional log-bound margin table
      if (!out.report["results"].contains("log_bound_margins"))
        bad += " [margin table missing]";
    }

    // Roth-Ridout alpha sweep
    run::CongruenceConfig cc;
    cc.p = 5;
    cc.alpha = 2;
    cc.alpha_max = 6;
    cc.A = 100;
    cc.B = 100;
    cc.delta = 0.1;
    cc.out = "roth_ridout.json";
    run::Outcome co = run::cmd_congruence(cc);
    run::emit(co, cc);
    os << "; roth-ridout first clean alpha "
       << co.report["results"]["roth_ridout"]["first_alpha_without_violations"].get<int>();
  } catch (const error& e) {
    bad += std::string(" [raised ") + e.what() + "]";
  }
  unsetenv("ORBITLF_OUTDIR");

  double dt = seconds_since(t0);
  os << "; artifacts in acceptance_artifacts/, " << dt << " s";
  if (total_budget_left < 0.0) bad += " [total pipeline exceeded 10 minutes]";
  detail = os.str() + bad;
  return bad.empty();
}

}  // namespace

int main() {
  const unsigned threads = resolve_threads(0);
  auto all_t0 = std::chrono::steady_clock::now();
  int failed = 0;

  struct Criterion {
    const char* name;
    std::function<bool(std::string&)> body;
  };
  const Criterion criteria[] = {
      {"exact-lemma-suite", [&](std::string& d) { return criterion_exact_lemmas(d, threads); }},
      {"congruence-counting", [&](std::string& d) { return criterion_congruence(d); }},
      {"afe-vs-oracle", [&](std::string& d) { return criterion_afe_vs_oracle(d, threads); }},
      {"moment-decomposition",
       [&](std::string& d) { return criterion_moment_decomposition(d, threads); }},
      {"second-moment-main-term",
       [&](std::string& d) { return criterion_second_moment_main_term(d, threads); }},
      {"mollifier-structure", [&](std::string& d) { return criterion_mollifier_structure(d); }},
      {"holder-chain", [&](std::string& d) { return criterion_holder_chain(d, threads); }},
      {"reproducibility", [&](std::string& d) { return criterion_reproducibility(d); }},
      {"report-only-envelopes",
       [&](std::string& d) {
         return criterion_report_envelopes(d, 600.0 - seconds_since(all_t0));
       }},
  };

  int id = 0;
  for (const Criterion& c : criteria) {
    ++id;
    std::string detail;
    bool ok = false;
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail += std::string("raised ") + e.what();
    }
    std::printf("%s  criterion-%d %s :: %s\n", ok ? "PASS" : "FAIL", id, c.name, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }

  double total = seconds_since(all_t0);
  std::printf("%s  acceptance %d/9 criteria, %.1f s total\n", failed ? "FAIL" : "PASS", 9 - failed,
              total);
  return failed ? 1 : 0;
}
