#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "orbitlf/lfunc.hpp"
#include "orbitlf/orbits.hpp"

namespace orbitlf {

struct TwistPair {
  std::uint64_t m1 = 1;
  std::uint64_t m2 = 1;
  std::uint64_t m1p = 1;  // m1 / gcd(m1, m2)
  std::uint64_t m2p = 1;  // m2 / gcd(m1, m2)

  TwistPair(std::uint64_t m1_in, std::uint64_t m2_in);
};

struct MomentOptions {
  double multiplier = kAfeDefaultMultiplier;
  SmoothingKernel kernel{};
  HurwitzParams hurwitz{};
  unsigned threads = 1;
};

// Orbit-averaged twisted moment
//   S(m1, m2) = (1/|O|) sum over chi in O of
//               L(1/2, chi eta1) L(1/2, conj(chi eta2)) chi(m1) conj(chi)(m2)
// with a direct (Hurwitz-oracle) route and an AFE route
//   S = S_plus + i^-(kappa1+kappa2) S_minus
// sharing one set of cached tables per (orbit, eta1, eta2).
class MomentEngine {
public:
  MomentEngine(const GaloisOrbit& orbit, const DirichletCharacter& eta1,
               const DirichletCharacter& eta2, const MomentOptions& opts = {});

  const GaloisOrbit& orbit() const { return orbit_; }
  int h() const { return h_; }
  double default_X() const;  // p^(h/2)
  int kappa1() const { return kappa1_; }
  int kappa2() const { return kappa2_; }
  const DirichletCharacter& eta1() const { return eta1_; }
  const DirichletCharacter& eta2() const { return eta2_; }
  cplx l_one_eta() const { return l_one_eta_; }

  // per-member products L(1/2, chi eta1) L(1/2, conj(chi eta2)), member order
  const std::vector<cplx>& l_products() const { return lprod_; }

  cplx direct(const TwistPair& pair) const;

  struct AfeMoment {
    cplx total;
    cplx s_plus;
    cplx s_minus;
    bool s_minus_exactly_zero = false;
    std::uint64_t cutoff1 = 0;
    std::uint64_t cutoff2 = 0;
  };
  AfeMoment afe(const TwistPair& pair, double X);

  cplx main_term(const TwistPair& pair) const;
  cplx diagonal_term(const TwistPair& pair, double X);

  // |E(m1,m2)| envelope with unit constants at twist exponent theta
  double envelope(double theta) const;

private:
  void validate_pair(const TwistPair& pair) const;
  struct Tables {
    std::vector<double> v1, v2;
    std::uint64_t d1 = 0, d2 = 0;
  };
  Tables& tables_for(double X);

  GaloisOrbit orbit_;
  DirichletCharacter eta1_, eta2_, eta_;
  int h_;
  int kappa1_, kappa2_;
  MomentOptions opts_;
  LValueTable l_half_;
  cplx l_one_eta_;
  std::vector<cplx> lprod_;
  std::vector<cplx> eavg_;      // E_O[chi(n)] by residue
  EpsilonAverageTable eps_;     // epsilon-weighted averages (exact zeros baked in)
  std::vector<std::uint64_t> inv_;  // unit inverses mod q
  std::map<double, Tables> vtables_;
};

// Spec-facing wrappers (each builds a one-shot engine).
cplx twisted_moment_direct(const GaloisOrbit& orbit, const DirichletCharacter& eta1,
                           const DirichletCharacter& eta2, const TwistPair& pair,
                           const MomentOptions& opts = {});
MomentEngine::AfeMoment twisted_moment_afe(const GaloisOrbit& orbit,
                                           const DirichletCharacter& eta1,
                                           const DirichletCharacter& eta2, const TwistPair& pair,
                                           double X, const MomentOptions& opts = {});
cplx main_term(const TwistPair& pair, const DirichletCharacter& eta1,
               const DirichletCharacter& eta2);
cplx diagonal_term(const TwistPair& pair, const DirichletCharacter& eta1,
                   const DirichletCharacter& eta2, double X, const MomentOptions& opts = {});

struct MomentErrorRow {
  std::uint64_t m1 = 0, m2 = 0;
  cplx direct;
  cplx main;
  cplx error;  // direct - main
};

struct MomentErrorSweep {
  double theta = 0.0;
  std::uint64_t twist_limit = 0;  // floor(q^theta)
  std::uint64_t skipped_multiples_of_p = 0;
  std::vector<MomentErrorRow> rows;
  cplx bilinear_value;  // sum x_m1 conj(x_m2) / sqrt(m1 m2) * E(m1, m2)
  double envelope = 0.0;
  double ratio = 0.0;  // |bilinear| / envelope, report-only
};

// Report-only aggregation of E(m1, m2) against the paper-shaped envelope.
// Coefficients beyond the twist limit are ignored; |x_m| <= 2 is enforced as
// an engineering budget covering the unit and Moebius choices.
MomentErrorSweep moment_error_sweep(const GaloisOrbit& orbit, const DirichletCharacter& eta1,
                                    const DirichletCharacter& eta2, double theta,
                                    const std::vector<double>& x,
                                    const MomentOptions& opts = {});

struct NonvanishingFlag {
  std::uint64_t residue = 0;  // member residue of chi
  double magnitude = 0.0;     // refined |L L| at doubled precision
};

struct NonvanishingCount {
  std::uint64_t count = 0;  // members with |L(1/2,chi eta1) L(1/2,conj(chi eta2))| > threshold
  std::uint64_t total = 0;
  double threshold = 0.0;
  std::vector<NonvanishingFlag> flagged;  // below threshold even after re-evaluation
};

NonvanishingCount nonvanishing_count(const GaloisOrbit& orbit, const DirichletCharacter& eta1,
                                     const DirichletCharacter& eta2, double threshold,
                                     const MomentOptions& opts = {});

}  // namespace orbitlf
