#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "orbitlf/lfunc.hpp"

namespace orbitlf::run {

using json = nlohmann::json;

// Flags common to every subcommand. format: "json" (default) or "csv";
// out: file path, empty for stdout. A relative path is placed under
// ORBITLF_OUTDIR when that variable is set.
struct CommonConfig {
  std::uint64_t p = 3;
  int k = 5;
  unsigned threads = 0;  // 0: ORBITLF_THREADS, then hardware (capped)
  std::string format = "json";
  std::string out;
};

// Picks one orbit: full orbit by characteristic c, or the thin orbit at
// level kappa containing `base` (base 0: the first thin orbit of O_c).
struct OrbitSelector {
  bool thin = false;
  std::uint64_t c = 1;
  int kappa = 0;
  std::uint64_t base = 0;
};

struct OrbitsConfig : CommonConfig {
  bool thin = false;   // list thin orbits instead of full ones
  int kappa = 0;
  bool c_set = false;  // restrict to one characteristic
  std::uint64_t c = 1;
};

struct VerifyConfig : CommonConfig {
  std::vector<std::pair<std::uint64_t, int>> ladder = {{3, 3}, {3, 4}, {3, 5}, {5, 3}};
  std::uint64_t seed = 20260815;
  int boxes = 50;
};

struct LValueConfig : CommonConfig {
  std::uint64_t chi = 1;
  double s_re = 0.5;
  double s_im = 0.0;
};

struct MomentConfig : CommonConfig {
  OrbitSelector orbit;
  std::uint64_t eta1 = 0;
  std::uint64_t eta2 = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> twists;  // empty: (1,1),(2,1)
  double X = 0.0;  // 0: engine default p^(h/2)
  double theta = 0.25;
  double multiplier = kAfeDefaultMultiplier;
  bool sweep = false;              // run the error sweep at theta
  double nonvanishing_threshold = 0.0;  // >0: count |L L| above it over the orbit
};

struct MollifyConfig : CommonConfig {
  std::string mode = "desk";
  int v = 4;
  double c = 1e-6;  // paper-mode target beta_K
  std::vector<double> beta = {0.15, 0.35};
  std::vector<int> ell = {4, 4};
  std::vector<int> s;
  OrbitSelector orbit;
  std::uint64_t eta1 = 0;  // both nonzero: mollified second moment + Holder chain
  std::uint64_t eta2 = 0;
  double x = 0.0;  // prime-sum length for the log-bound margins; 0: q
  bool vth = false;
};

struct CongruenceConfig : CommonConfig {
  double A = 100.0;
  double B = 100.0;
  int alpha = 2;
  int alpha_max = 0;   // >alpha: sweep the range
  double delta = 0.0;  // >0: Roth-Ridout probe per alpha
};

struct Outcome {
  json report;
  int exit_code = 0;
  std::string text;  // human/grep lines (verify); empty elsewhere
};

Outcome cmd_orbits(const OrbitsConfig& cfg);
Outcome cmd_verify(const VerifyConfig& cfg);
Outcome cmd_lvalue(const LValueConfig& cfg);
Outcome cmd_moment(const MomentConfig& cfg);
Outcome cmd_mollify(const MollifyConfig& cfg);
Outcome cmd_congruence(const CongruenceConfig& cfg);

// Lossy flat rendering: rows from results.rows or results.checks with the
// column list in report["csv_columns"]; complex [re, im] cells split in two.
std::string to_csv(const json& report);

// Removes every key starting with "elapsed" recursively; what is left must be
// bit-identical across reruns of the same config.
json strip_timing(json report);

// Writes/prints the outcome: text lines to stdout, then the rendered report
// to cfg.out (ORBITLF_OUTDIR-resolved) or stdout.
void emit(const Outcome& outcome, const CommonConfig& cfg);

}  // namespace orbitlf::run
