#include "orbitlf/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "orbitlf/congruence.hpp"
#include "orbitlf/errors.hpp"
#include "orbitlf/mollifier.hpp"
#include "orbitlf/moments.hpp"
#include "orbitlf/parallel.hpp"
#include "orbitlf/verify.hpp"

namespace orbitlf::run {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

json cj(const cplx& z) { return json::array({z.real(), z.imag()}); }

json checks_json(const std::vector<verify::CheckResult>& checks) {
  json rows = json::array();
  for (const auto& c : checks)
    rows.push_back({{"name", c.name},
                    {"pass", c.pass},
                    {"detail", c.detail},
                    {"elapsed_ms", c.elapsed_ms}});
  return rows;
}

json make_report(const std::string& command, json config, json results, double ms) {
  json rep;
  rep["schema"] = "orbitlf-report/1";
  rep["command"] = command;
  rep["config"] = std::move(config);
  rep["results"] = std::move(results);
  rep["elapsed_ms"] = ms;
  return rep;
}

json base_config(const CommonConfig& cfg, const std::string& command) {
  json j;
  j["subcommand"] = command;
  j["p"] = cfg.p;
  j["k"] = cfg.k;
  j["threads"] = cfg.threads;
  j["format"] = cfg.format;
  j["out"] = cfg.out;
  return j;
}

json selector_json(const OrbitSelector& sel) {
  json j;
  j["thin"] = sel.thin;
  j["c"] = sel.c;
  j["kappa"] = sel.kappa;
  j["base"] = sel.base;
  return j;
}

GaloisOrbit resolve_orbit(const ModulusPtr& mod, const OrbitSelector& sel) {
  std::uint64_t c = sel.c;
  if (sel.thin && sel.base != 0) c = DirichletCharacter(mod, sel.base).characteristic();
  GaloisOrbit parent = GaloisOrbit::full_orbit(mod, c);
  if (!sel.thin) return parent;
  auto thins = GaloisOrbit::thin_orbits(mod, sel.kappa, parent);
  require(!thins.empty(), errc::bad_parameters, "selected full orbit has no thin orbits");
  if (sel.base == 0) return thins.front();
  for (const GaloisOrbit& th : thins)
    if (std::binary_search(th.members().begin(), th.members().end(), sel.base)) return th;
  fail(errc::bad_parameters, "base residue " + std::to_string(sel.base) +
                                 " is not primitive of characteristic " + std::to_string(c));
}

json orbit_summary(const GaloisOrbit& orbit) {
  json j;
  j["kind"] = orbit.kind() == OrbitKind::full ? "full" : "thin";
  j["c"] = orbit.characteristic();
  if (orbit.kind() == OrbitKind::thin) j["kappa"] = orbit.kappa();
  j["base"] = orbit.base_residue();
  j["size"] = orbit.size();
  j["parity"] = orbit.parity();
  constexpr std::size_t kMemberCap = 1024;
  if (orbit.size() <= kMemberCap) {
    j["members"] = orbit.members();
  } else {
    j["members_omitted"] = true;
  }
  return j;
}

}  // namespace

Outcome cmd_orbits(const OrbitsConfig& cfg) {
  Timer t;
  json config = base_config(cfg, "orbits");
  config["thin"] = cfg.thin;
  config["kappa"] = cfg.kappa;
  config["c"] = cfg.c_set ? json(cfg.c) : json();

  ModulusPtr mod = build_modulus(cfg.p, cfg.k);
  std::vector<std::uint64_t> cs;
  if (cfg.c_set) {
    cs.push_back(cfg.c);
  } else {
    for (std::uint64_t c = 1; c < cfg.p; ++c)
      if ((cfg.p - 1) % c == 0) cs.push_back(c);
  }

  json listing = json::array();
  for (std::uint64_t c : cs) {
    GaloisOrbit parent = GaloisOrbit::full_orbit(mod, c);
    if (!cfg.thin) {
      listing.push_back(orbit_summary(parent));
      continue;
    }
    if (parent.size() == 0) continue;
    for (const GaloisOrbit& th : GaloisOrbit::thin_orbits(mod, cfg.kappa, parent))
      listing.push_back(orbit_summary(th));
  }

  auto checks = verify::partition_suite(cfg.p, cfg.k);
  bool all_pass = std::all_of(checks.begin(), checks.end(),
                              [](const verify::CheckResult& c) { return c.pass; });

  json results;
  results["q"] = mod->q();
  results["group_order"] = mod->group_order();
  results["generator"] = mod->generator();
  results["orbit_count"] = listing.size();
  results["rows"] = std::move(listing);
  results["checks"] = checks_json(checks);
  results["all_pass"] = all_pass;

  Outcome out;
  out.report = make_report("orbits", std::move(config), std::move(results), t.ms());
  out.report["csv_columns"] = json::array({"kind", "c", "base", "size", "parity"});
  out.exit_code = all_pass ? 0 : 2;
  return out;
}

Outcome cmd_verify(const VerifyConfig& cfg) {
  Timer t;
  require(!cfg.ladder.empty(), errc::bad_parameters, "verify: empty modulus ladder");

  json config = base_config(cfg, "verify");
  config["seed"] = cfg.seed;
  config["boxes"] = cfg.boxes;
  json ladder = json::array();
  for (auto [p, k] : cfg.ladder) ladder.push_back({{"p", p}, {"k", k}});
  config["ladder"] = std::move(ladder);

  unsigned threads = resolve_threads(cfg.threads);
  std::vector<verify::CheckResult> checks;
  for (auto [p, k] : cfg.ladder) {
    auto entry = verify::ladder_entry_suite(p, k, cfg.seed, threads);
    checks.insert(checks.end(), entry.begin(), entry.end());
  }
  auto boxes = verify::congruence_box_suite(cfg.boxes, cfg.seed);
  checks.insert(checks.end(), boxes.begin(), boxes.end());

  std::size_t failed = 0;
  std::ostringstream lines;
  for (const auto& c : checks) {
    if (!c.pass) ++failed;
    char ms[32];
    std::snprintf(ms, sizeof(ms), "%.1f", c.elapsed_ms);
    lines << (c.pass ? "PASS " : "FAIL ") << c.name << " :: " << c.detail << " (" << ms
          << " ms)\n";
  }
  lines << (failed ? "VERIFY FAIL " : "VERIFY PASS ") << (checks.size() - failed) << "/"
        << checks.size() << " checks\n";

  json results;
  results["checks"] = checks_json(checks);
  results["total"] = checks.size();
  results["passed"] = checks.size() - failed;
  results["failed"] = failed;

  Outcome out;
  out.report = make_report("verify", std::move(config), std::move(results), t.ms());
  out.report["csv_columns"] = json::array({"name", "pass", "elapsed_ms", "detail"});
  out.exit_code = failed ? 2 : 0;
  out.text = lines.str();
  return out;
}

Outcome cmd_lvalue(const LValueConfig& cfg) {
  Timer t;
  json config = base_config(cfg, "lvalue");
  config["chi"] = cfg.chi;
  config["s"] = json::array({cfg.s_re, cfg.s_im});

  ModulusPtr mod = build_modulus(cfg.p, cfg.k);
  DirichletCharacter chi(mod, cfg.chi);
  cplx s(cfg.s_re, cfg.s_im);
  cplx value = l_value_oracle(s, chi);
  cplx conj_value = l_value_oracle(std::conj(s), chi.conjugate());

  json results;
  results["residue"] = chi.residue();
  results["height"] = chi.height();
  results["primitive"] = chi.primitive();
  results["parity"] = chi.parity();
  results["characteristic"] = chi.characteristic();
  results["value"] = cj(value);
  results["abs"] = std::abs(value);
  results["conjugation_defect"] = std::abs(conj_value - std::conj(value));
  if (chi.primitive()) {
    cplx eps = root_number(chi);
    results["root_number"] = cj(eps);
    results["root_number_abs_defect"] = std::abs(std::abs(eps) - 1.0);
    if (std::abs(s - cplx(1.0, 0.0)) > 1e-12 && std::abs(s) > 1e-12) {
      FunctionalEquationCheck fe = functional_equation_check(s - cplx(0.5, 0.0), chi);
      results["functional_equation"] = {
          {"left", cj(fe.left)}, {"right", cj(fe.right)}, {"defect", fe.defect}};
    }
  }

  Outcome out;
  out.report = make_report("lvalue", std::move(config), std::move(results), t.ms());
  return out;
}

Outcome cmd_moment(const MomentConfig& cfg) {
  Timer t;
  require(cfg.eta1 != 0 && cfg.eta2 != 0, errc::bad_parameters,
          "moment: --eta1 and --eta2 residues are required");

  auto twists = cfg.twists;
  if (twists.empty()) twists = {{1, 1}, {2, 1}};

  json config = base_config(cfg, "moment");
  config["orbit"] = selector_json(cfg.orbit);
  config["eta1"] = cfg.eta1;
  config["eta2"] = cfg.eta2;
  config["X"] = cfg.X;
  config["theta"] = cfg.theta;
  config["multiplier"] = cfg.multiplier;
  config["sweep"] = cfg.sweep;
  config["nonvanishing_threshold"] = cfg.nonvanishing_threshold;
  json jt = json::array();
  for (auto [m1, m2] : twists) jt.push_back(json::array({m1, m2}));
  config["twists"] = std::move(jt);

  ModulusPtr mod = build_modulus(cfg.p, cfg.k);
  GaloisOrbit orbit = resolve_orbit(mod, cfg.orbit);
  DirichletCharacter eta1(mod, cfg.eta1), eta2(mod, cfg.eta2);
  MomentOptions opts;
  opts.multiplier = cfg.multiplier;
  opts.threads = resolve_threads(cfg.threads);
  MomentEngine engine(orbit, eta1, eta2, opts);
  const double X = cfg.X > 0.0 ? cfg.X : engine.default_X();

  json rows = json::array();
  for (auto [m1, m2] : twists) {
    TwistPair pair(m1, m2);
    cplx direct = engine.direct(pair);
    MomentEngine::AfeMoment afe = engine.afe(pair, X);
    cplx main = engine.main_term(pair);
    json row;
    row["m1"] = m1;
    row["m2"] = m2;
    row["m1_reduced"] = pair.m1p;
    row["m2_reduced"] = pair.m2p;
    row["direct"] = cj(direct);
    row["afe_total"] = cj(afe.total);
    row["s_plus"] = cj(afe.s_plus);
    row["s_minus"] = cj(afe.s_minus);
    row["s_minus_exactly_zero"] = afe.s_minus_exactly_zero;
    row["afe_defect"] = std::abs(afe.total - direct);
    row["main_term"] = cj(main);
    row["error"] = cj(direct - main);
    row["error_abs"] = std::abs(direct - main);
    row["diagonal"] = cj(engine.diagonal_term(pair, X));
    rows.push_back(std::move(row));
  }

  // diagonal -> main as X grows, on the first twist pair
  TwistPair lead(twists.front().first, twists.front().second);
  cplx lead_main = engine.main_term(lead);
  json diag = json::array();
  for (double Xi : {1.0, engine.default_X(), engine.default_X() * engine.default_X()}) {
    cplx d = engine.diagonal_term(lead, Xi);
    diag.push_back({{"X", Xi},
                    {"diagonal", cj(d)},
                    {"main_term", cj(lead_main)},
                    {"error_abs", std::abs(d - lead_main)}});
  }

  json results;
  results["orbit"] = orbit_summary(engine.orbit());
  results["h"] = engine.h();
  results["kappa1"] = engine.kappa1();
  results["kappa2"] = engine.kappa2();
  results["eta1_height"] = eta1.height();
  results["eta2_height"] = eta2.height();
  results["X_used"] = X;
  results["default_X"] = engine.default_X();
  results["l_one_eta"] = cj(engine.l_one_eta());
  results["rows"] = std::move(rows);
  results["diagonal_to_main"] = std::move(diag);
  results["envelope"] = {{"theta", cfg.theta}, {"value", engine.envelope(cfg.theta)}};

  if (cfg.sweep) {
    MomentErrorSweep sw = moment_error_sweep(orbit, eta1, eta2, cfg.theta, {}, opts);
    json srows = json::array();
    for (const auto& r : sw.rows)
      srows.push_back({{"m1", r.m1},
                       {"m2", r.m2},
                       {"direct", cj(r.direct)},
                       {"main_term", cj(r.main)},
                       {"error", cj(r.error)}});
    results["error_sweep"] = {{"theta", sw.theta},
                              {"twist_limit", sw.twist_limit},
                              {"skipped_multiples_of_p", sw.skipped_multiples_of_p},
                              {"rows", std::move(srows)},
                              {"bilinear_value", cj(sw.bilinear_value)},
                              {"envelope", sw.envelope},
                              {"ratio", sw.ratio}};
  }

  if (cfg.nonvanishing_threshold > 0.0) {
    NonvanishingCount nv = nonvanishing_count(orbit, eta1, eta2, cfg.nonvanishing_threshold, opts);
    json flagged = json::array();
    for (const auto& f : nv.flagged)
      flagged.push_back({{"residue", f.residue}, {"magnitude", f.magnitude}});
    results["nonvanishing"] = {{"count", nv.count},
                               {"total", nv.total},
                               {"threshold", nv.threshold},
                               {"flagged", std::move(flagged)}};
  }

  Outcome out;
  out.report = make_report("moment", std::move(config), std::move(results), t.ms());
  out.report["csv_columns"] =
      json::array({"m1", "m2", "direct", "afe_total", "afe_defect", "main_term", "error_abs"});
  return out;
}

Outcome cmd_mollify(const MollifyConfig& cfg) {
  Timer t;
  json config = base_config(cfg, "mollify");
  config["mode"] = cfg.mode;
  config["v"] = cfg.v;
  config["c"] = cfg.c;
  config["beta"] = cfg.beta;
  config["ell"] = cfg.ell;
  config["s"] = cfg.s;
  config["orbit"] = selector_json(cfg.orbit);
  config["eta1"] = cfg.eta1;
  config["eta2"] = cfg.eta2;
  config["x"] = cfg.x;
  config["vth"] = cfg.vth;

  ModulusPtr mod = build_modulus(cfg.p, cfg.k);
  const std::uint64_t q = mod->q();
  require(cfg.mode == "paper" || cfg.mode == "desk", errc::bad_parameters,
          "mollify: mode must be paper or desk");
  MollifierParams params = cfg.mode == "paper"
                               ? MollifierParams::paper_mode(q, cfg.v, cfg.c)
                               : MollifierParams::desk_mode(q, cfg.v, cfg.beta, cfg.ell, cfg.s);
  MomentOptions opts;
  opts.threads = resolve_threads(cfg.threads);

  json intervals = json::array();
  for (int j = 0; j <= params.K(); ++j) {
    auto primes = params.interval_primes(j);
    json ji;
    ji["j"] = j;
    ji["lo"] = params.interval_lo(j);
    ji["hi"] = params.interval_hi(j);
    ji["prime_count"] = primes.size();
    if (primes.size() <= 64) ji["primes"] = primes;
    intervals.push_back(std::move(ji));
  }

  json results;
  results["params"] = {{"mode", cfg.mode},
                       {"K", params.K()},
                       {"v", params.v},
                       {"beta", params.beta},
                       {"ell", params.ell},
                       {"s", params.s},
                       {"lambda", params.lambda},
                       {"c_bound", MollifierParams::c_bound(params.v)},
                       {"size_hypothesis", params.size_hypothesis()},
                       {"intervals", std::move(intervals)}};

  std::vector<std::uint64_t> prim;
  for (std::uint64_t a = 1; a < mod->group_order(); ++a)
    if (a % cfg.p != 0) prim.push_back(a);

  std::uint64_t n_out = 0, n_all = 0, n_mid = 0;
  for (std::uint64_t a : prim) {
    MainPropCase mc = main_prop_case(DirichletCharacter(mod, a), params);
    if (mc.kind == PropCase::not_in_t0)
      ++n_out;
    else if (mc.kind == PropCase::in_all_t_r)
      ++n_all;
    else
      ++n_mid;
  }
  results["trichotomy"] = {{"primitive_characters", prim.size()},
                           {"not_in_t0", n_out},
                           {"in_all_t_r", n_all},
                           {"first_failure_at", n_mid}};

  // conditional log|L| upper bound margins on a small character sample
  {
    double x = cfg.x > 0.0 ? cfg.x : static_cast<double>(q);
    LValueTable half(mod, cplx(0.5, 0.0));
    json margins = json::array();
    for (std::size_t i = 0; i < prim.size(); i += std::max<std::size_t>(1, prim.size() / 8)) {
      DirichletCharacter chi(mod, prim[i]);
      double la = std::abs(half.value(chi));
      double rhs = log_l_upper_rhs(chi, x, params);
      margins.push_back({{"residue", prim[i]},
                         {"log_abs_l", std::log(la)},
                         {"rhs", rhs},
                         {"margin", rhs - std::log(la)}});
    }
    results["log_bound_margins"] = {{"x", x}, {"rows", std::move(margins)}};
  }

  if (cfg.eta1 != 0 && cfg.eta2 != 0) {
    GaloisOrbit orbit = resolve_orbit(mod, cfg.orbit);
    DirichletCharacter eta1(mod, cfg.eta1), eta2(mod, cfg.eta2);
    MollifiedSecondMoment sm = mollified_second_moment(orbit, eta1, eta2, params, opts);
    results["second_moment"] = {{"value", cj(sm.value)},
                                {"b_const", cj(sm.b_const)},
                                {"b_tail_bound", sm.b_tail_bound},
                                {"ratio", cj(sm.ratio)},
                                {"abs_value", std::abs(sm.value)}};
    HolderLowerBound hb = holder_lower_bound(orbit, eta1, eta2, params, opts);
    results["holder"] = {{"nonvanishing", hb.nonvanishing},
                         {"orbit_size", hb.orbit_size},
                         {"s_avg", cj(hb.s_avg)},
                         {"f1_avg", hb.f1_avg},
                         {"f2_avg", hb.f2_avg},
                         {"chain_ok", hb.chain_ok},
                         {"chain_slack", hb.chain_slack},
                         {"lower_bound_proportion", hb.lower_bound_proportion},
                         {"lower_bound_count", hb.lower_bound_count}};
  }

  if (cfg.vth) {
    MollifiedVthMoment vm = mollified_vth_moment(mod, cfg.v, params, opts);
    results["vth_moment"] = {
        {"value", vm.value}, {"ratio", vm.ratio}, {"characters", vm.characters}};
  }

  Outcome out;
  out.report = make_report("mollify", std::move(config), std::move(results), t.ms());
  return out;
}

Outcome cmd_congruence(const CongruenceConfig& cfg) {
  Timer t;
  json config = base_config(cfg, "congruence");
  config["A"] = cfg.A;
  config["B"] = cfg.B;
  config["alpha"] = cfg.alpha;
  config["alpha_max"] = cfg.alpha_max;
  config["delta"] = cfg.delta;

  const int hi = std::max(cfg.alpha, cfg.alpha_max);
  json rows = json::array();
  for (int alpha = cfg.alpha; alpha <= hi; ++alpha) {
    DyadicBox box{cfg.A, cfg.B, cfg.p, alpha};
    NaiveBoundCheck nb = naive_bound_check(box);
    const CongruenceCountReport& r = nb.report;
    json row;
    row["p"] = r.p;
    row["alpha"] = r.alpha;
    row["A"] = r.A;
    row["B"] = r.B;
    row["anchors_rounded"] = r.anchors_rounded;
    row["d0_raw"] = r.d0_raw;
    row["d1_raw"] = r.d1_raw;
    row["d2_raw"] = r.d2_raw;
    row["d0_norm"] = r.d0_normalized;
    row["d1_norm"] = r.d1_normalized;
    row["d2_norm"] = r.d2_normalized;
    row["per_zeta"] = r.per_zeta;
    row["bound"] = nb.bound;
    row["bound_margin"] = nb.margin;
    row["bound_ok"] = nb.ok;
    row["elapsed_ms"] = r.elapsed_ms;
    rows.push_back(std::move(row));
  }

  json results;
  results["rows"] = std::move(rows);

  if (cfg.delta > 0.0) {
    json probes = json::array();
    int first_zero = -1;
    for (int alpha = cfg.alpha; alpha <= hi; ++alpha) {
      RothRidoutProbe pr = roth_ridout_probe(cfg.p, alpha, cfg.delta);
      if (first_zero < 0 && pr.boxes_checked > 0 && pr.d0_total == 0) first_zero = alpha;
      probes.push_back({{"alpha", pr.alpha},
                        {"size_limit", pr.size_limit},
                        {"boxes_checked", pr.boxes_checked},
                        {"boxes_skipped", pr.boxes_skipped},
                        {"d0_total", pr.d0_total},
                        {"d1_total", pr.d1_total},
                        {"d2_total", pr.d2_total},
                        {"max_box_d0", pr.max_box_d0}});
    }
    results["roth_ridout"] = {{"delta", cfg.delta},
                              {"probes", std::move(probes)},
                              {"first_alpha_without_violations", first_zero}};
  }

  Outcome out;
  out.report = make_report("congruence", std::move(config), std::move(results), t.ms());
  out.report["csv_columns"] = json::array(
      {"p", "alpha", "A", "B", "d0_raw", "d1_raw", "d2_raw", "d0_norm", "bound_margin"});
  return out;
}

namespace {

std::string csv_cell(const json& v) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    std::string quoted = "\"";
    for (char ch : s) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    quoted += '"';
    return quoted;
  }
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  return v.dump();
}

bool is_complex_cell(const json& v) {
  return v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number();
}

}  // namespace

std::string to_csv(const json& report) {
  const json* rows = nullptr;
  if (report.contains("results")) {
    const json& res = report["results"];
    if (res.contains("rows") && res["rows"].is_array())
      rows = &res["rows"];
    else if (res.contains("checks") && res["checks"].is_array())
      rows = &res["checks"];
  }
  std::ostringstream os;
  if (!rows || rows->empty()) {
    os << "key,value\n";
    if (report.contains("results"))
      for (const auto& [key, v] : report["results"].items())
        if (v.is_primitive()) os << key << "," << csv_cell(v) << "\n";
    return os.str();
  }

  std::vector<std::string> cols;
  if (report.contains("csv_columns"))
    for (const auto& c : report["csv_columns"]) cols.push_back(c.get<std::string>());
  else
    for (const auto& [key, v] : rows->front().items()) {
      (void)v;
      cols.push_back(key);
    }

  const json& first = rows->front();
  bool lead = true;
  for (const auto& c : cols) {
    if (!lead) os << ",";
    lead = false;
    if (first.contains(c) && is_complex_cell(first[c]))
      os << c << "_re," << c << "_im";
    else
      os << c;
  }
  os << "\n";
  for (const auto& row : *rows) {
    lead = true;
    for (const auto& c : cols) {
      if (!lead) os << ",";
      lead = false;
      if (!row.contains(c)) continue;
      const json& v = row[c];
      if (is_complex_cell(v))
        os << v[0].dump() << "," << v[1].dump();
      else
        os << csv_cell(v);
    }
    os << "\n";
  }
  return os.str();
}

json strip_timing(json report) {
  if (report.is_object()) {
    json out = json::object();
    for (auto& [key, v] : report.items())
      if (key.rfind("elapsed", 0) != 0) out[key] = strip_timing(v);
    return out;
  }
  if (report.is_array()) {
    json out = json::array();
    for (auto& v : report) out.push_back(strip_timing(v));
    return out;
  }
  return report;
}

void emit(const Outcome& outcome, const CommonConfig& cfg) {
  if (!outcome.text.empty()) std::fputs(outcome.text.c_str(), stdout);
  std::string rendered =
      cfg.format == "csv" ? to_csv(outcome.report) : outcome.report.dump(2) + "\n";
  if (!cfg.out.empty()) {
    std::filesystem::path path(cfg.out);
    if (path.is_relative())
      if (const char* dir = std::getenv("ORBITLF_OUTDIR"); dir && *dir)
        path = std::filesystem::path(dir) / path;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path);
    require(f.good(), errc::bad_parameters, "cannot open output file " + path.string());
    f << rendered;
  } else if (outcome.text.empty()) {
    std::fputs(rendered.c_str(), stdout);
  }
}

}  // namespace orbitlf::run
