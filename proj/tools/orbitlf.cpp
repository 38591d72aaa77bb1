#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbitlf/errors.hpp"
#include "orbitlf/runner.hpp"

namespace {

using namespace orbitlf;

// Accepts `--out json`/`--out csv` (format to stdout) as well as a file path.
void finalize_output(run::CommonConfig& cfg) {
  if (cfg.out == "json" || cfg.out == "csv") {
    cfg.format = cfg.out;
    cfg.out.clear();
  }
}

void add_common(CLI::App* sub, run::CommonConfig& cfg) {
  sub->add_option("--p", cfg.p, "prime p of the modulus p^k");
  sub->add_option("--k", cfg.k, "exponent k of the modulus p^k");
  sub->add_option("--threads", cfg.threads,
                  "worker count (0 = hardware; ORBITLF_THREADS overrides)");
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", cfg.out,
                  "output file path, or the literal json/csv to pick the stdout format");
}

std::vector<std::pair<std::uint64_t, int>> parse_ladder(const std::string& text) {
  std::vector<std::pair<std::uint64_t, int>> ladder;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    pos = comma == std::string::npos ? text.size() : comma + 1;
    if (item.empty()) continue;
    std::size_t sep = item.find_first_of("^:x");
    require(sep != std::string::npos, errc::bad_parameters,
            "ladder entry '" + item + "' must look like p^k");
    ladder.push_back({std::stoull(item.substr(0, sep)), std::stoi(item.substr(sep + 1))});
  }
  return ladder;
}

std::pair<std::uint64_t, std::uint64_t> parse_twist(const std::string& text) {
  std::size_t sep = text.find_first_of(":x,");
  require(sep != std::string::npos, errc::bad_parameters,
          "twist '" + text + "' must look like m1:m2");
  return {std::stoull(text.substr(0, sep)), std::stoull(text.substr(sep + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbitlf: Dirichlet L-function central values over Galois orbits of "
               "prime-power modulus"};
  app.require_subcommand(1);
  int rc = 0;

  run::OrbitsConfig ocfg;
  auto* orbits = app.add_subcommand("orbits", "enumerate orbits and check partition invariants");
  add_common(orbits, ocfg);
  auto* othin = orbits->add_option("--thin", ocfg.kappa, "list thin orbits at this level kappa");
  auto* oc = orbits->add_option("--c", ocfg.c, "restrict to one characteristic c | p-1");
  orbits->callback([&] {
    ocfg.thin = othin->count() > 0;
    ocfg.c_set = oc->count() > 0;
    finalize_output(ocfg);
    run::Outcome out = run::cmd_orbits(ocfg);
    run::emit(out, ocfg);
    rc = out.exit_code;
  });

  run::VerifyConfig vcfg;
  std::string ladder_text;
  auto* verify = app.add_subcommand("verify", "run the exact-lemma suite over a modulus ladder");
  add_common(verify, vcfg);
  auto* vladder =
      verify->add_option("--ladder", ladder_text, "comma-separated moduli, e.g. 3^3,3^4,5^3");
  verify->add_option("--seed", vcfg.seed, "seed for the randomized congruence boxes");
  verify->add_option("--boxes", vcfg.boxes, "number of randomized congruence boxes");
  verify->callback([&] {
    if (vladder->count() > 0) vcfg.ladder = parse_ladder(ladder_text);
    finalize_output(vcfg);
    run::Outcome out = run::cmd_verify(vcfg);
    run::emit(out, vcfg);
    rc = out.exit_code;
  });

  run::LValueConfig lcfg;
  auto* lvalue = app.add_subcommand("lvalue", "L(s, chi) by the Hurwitz-zeta oracle");
  add_common(lvalue, lcfg);
  lvalue->add_option("--chi", lcfg.chi, "character residue a mod q_k");
  lvalue->add_option("--s-re", lcfg.s_re, "Re s");
  lvalue->add_option("--s-im", lcfg.s_im, "Im s");
  lvalue->callback([&] {
    finalize_output(lcfg);
    run::Outcome out = run::cmd_lvalue(lcfg);
    run::emit(out, lcfg);
    rc = out.exit_code;
  });

  run::MomentConfig mcfg;
  std::uint64_t m1 = 1, m2 = 1;
  std::vector<std::string> twist_specs;
  auto* moment = app.add_subcommand("moment", "twisted second moments over an orbit");
  add_common(moment, mcfg);
  moment->add_option("--c", mcfg.orbit.c, "full-orbit characteristic c | p-1");
  auto* mthin = moment->add_option("--thin", mcfg.orbit.kappa, "use a thin orbit at this kappa");
  moment->add_option("--base", mcfg.orbit.base, "thin orbit base residue (0: first)");
  moment->add_option("--eta1", mcfg.eta1, "residue of eta1 mod q_k (imprimitive, nonzero)");
  moment->add_option("--eta2", mcfg.eta2, "residue of eta2 mod q_k (imprimitive, nonzero)");
  auto* mo1 = moment->add_option("--m1", m1, "twist numerator");
  auto* mo2 = moment->add_option("--m2", m2, "twist denominator");
  moment->add_option("--twist", twist_specs, "additional twist pairs m1:m2 (repeatable)");
  moment->add_option("--X", mcfg.X, "AFE balance point (0: p^(h/2))");
  moment->add_option("--theta", mcfg.theta, "twist exponent for the error envelope");
  moment->add_option("--multiplier", mcfg.multiplier, "AFE tail cutoff multiplier");
  moment->add_flag("--sweep", mcfg.sweep, "run the error sweep over all twists up to q^theta");
  moment->add_option("--nonvanishing", mcfg.nonvanishing_threshold,
                     "count |L L| above this threshold over the orbit");
  moment->callback([&] {
    mcfg.orbit.thin = mthin->count() > 0;
    if (mo1->count() > 0 || mo2->count() > 0) mcfg.twists.push_back({m1, m2});
    for (const std::string& spec : twist_specs) mcfg.twists.push_back(parse_twist(spec));
    finalize_output(mcfg);
    run::Outcome out = run::cmd_moment(mcfg);
    run::emit(out, mcfg);
    rc = out.exit_code;
  });

  run::MollifyConfig fcfg;
  auto* mollify = app.add_subcommand("mollify", "mollifier diagnostics and mollified moments");
  add_common(mollify, fcfg);
  mollify->add_option("--mode", fcfg.mode, "paper or desk")
      ->check(CLI::IsMember({"paper", "desk"}));
  mollify->add_option("--v", fcfg.v, "moment exponent v");
  mollify->add_option("--c", fcfg.c, "paper-mode target beta_K");
  mollify->add_option("--beta", fcfg.beta, "desk-mode interval exponents (increasing)");
  mollify->add_option("--ell", fcfg.ell, "desk-mode truncation lengths (even)");
  mollify->add_option("--s", fcfg.s, "desk-mode s_j overrides");
  mollify->add_option("--orbit-c", fcfg.orbit.c, "orbit characteristic for the second moment");
  auto* fthin = mollify->add_option("--thin", fcfg.orbit.kappa, "use a thin orbit at this kappa");
  mollify->add_option("--base", fcfg.orbit.base, "thin orbit base residue");
  mollify->add_option("--eta1", fcfg.eta1, "eta1 residue (with --eta2: mollified second moment)");
  mollify->add_option("--eta2", fcfg.eta2, "eta2 residue");
  mollify->add_option("--x", fcfg.x, "prime-sum length for the log-bound margins (0: q)");
  mollify->add_flag("--vth", fcfg.vth, "also compute the mollified v-th moment over all chi");
  mollify->callback([&] {
    fcfg.orbit.thin = fthin->count() > 0;
    finalize_output(fcfg);
    run::Outcome out = run::cmd_mollify(fcfg);
    run::emit(out, fcfg);
    rc = out.exit_code;
  });

  run::CongruenceConfig ccfg;
  auto* congruence = app.add_subcommand("congruence", "Teichmuller-class congruence counts");
  add_common(congruence, ccfg);
  congruence->add_option("--A", ccfg.A, "first dyadic anchor");
  congruence->add_option("--B", ccfg.B, "second dyadic anchor");
  congruence->add_option("--alpha", ccfg.alpha, "modulus exponent alpha");
  congruence->add_option("--alpha-max", ccfg.alpha_max, "sweep alpha up to this value");
  congruence->add_option("--delta", ccfg.delta, "Roth-Ridout probe exponent (0: off)");
  congruence->callback([&] {
    finalize_output(ccfg);
    run::Outcome out = run::cmd_congruence(ccfg);
    run::emit(out, ccfg);
    rc = out.exit_code;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 1;
  } catch (const orbitlf::error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return rc;
}
