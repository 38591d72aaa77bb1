#pragma once

#include <cstdint>
#include <vector>

#include "orbitlf/moments.hpp"

namespace orbitlf {

// Root of exp(-x) = x + x^2/2 (bisection to 1e-14); the exponent constant
// shared by every mollifier coefficient.
double lambda_constant();

// PAPER mode reproduces the asymptotic interval ladder
//   beta_j = e^j loglog(q)/log(q) (those below c), beta_K = c,
//   s_j = 2 floor(1/(8 beta_j)), ell_j = floor(s_j^(3/4)),
// rejecting c >= 4(e^(1/4)-1)^4 / (e (v+2)^4) and odd ell_j. At desk-scale q
// no beta_j falls below c, so K = 0 and every interval is empty.
//
// DESK mode takes user-chosen strictly increasing beta and even ell >= 2 so
// the interval machinery is exercised with nonempty prime sets; the
// asymptotic size hypotheses do not hold there and are only reported.
struct MollifierParams {
  enum class Mode { paper, desk };

  Mode mode = Mode::desk;
  std::uint64_t q = 0;
  int v = 4;
  double c = 0.0;  // paper-mode target beta_K
  std::vector<double> beta;
  std::vector<int> ell;
  std::vector<int> s;
  double lambda = 0.0;

  static MollifierParams paper_mode(std::uint64_t q, int v, double c);
  static MollifierParams desk_mode(std::uint64_t q, int v, std::vector<double> beta,
                                   std::vector<int> ell, std::vector<int> s = {});

  static double c_bound(int v);  // 4(e^(1/4)-1)^4 / (e (v+2)^4)

  int K() const { return static_cast<int>(beta.size()) - 1; }
  double log_q() const;
  double interval_lo(int j) const;  // exclusive
  double interval_hi(int j) const;  // inclusive (nudged up 1e-12 relative)
  std::vector<std::uint32_t> interval_primes(int j) const;
  bool size_hypothesis() const;  // (v+2) sum ell_r beta_r < 1, report-only
};

double a_coeff(double rho, int u, const MollifierParams& params);
double b_coeff(double rho, int j, const MollifierParams& params);

// E_ell(t) = sum_{s<=ell} t^s/s!. Positivity on the real line needs even ell;
// callers that rely on it pass require_positive.
double truncated_exp(double t, int ell, bool require_positive = false);
cplx truncated_exp(const cplx& t, int ell);

struct PIntervalValue {
  cplx value;
  bool empty = false;
  std::size_t prime_count = 0;
};
// P_{I_j}(chi; u) = sum over primes rho in I_j of chi(rho) a(rho; u) / sqrt(rho)
PIntervalValue p_interval(const DirichletCharacter& chi, int j, int u,
                          const MollifierParams& params);

struct MollifierPiece {
  cplx exp_route;      // E_{ell_j}(-P_{I_j}(chi; K))
  cplx divisor_route;  // sum over I_j-smooth n with Omega(n) <= ell_j
  std::uint64_t divisor_terms = 0;
};
MollifierPiece mollifier_piece(const DirichletCharacter& chi, int j,
                               const MollifierParams& params);

cplx mollifier(const DirichletCharacter& chi, const MollifierParams& params);

// nu_v(n; ell): ordered factorizations of n into v parts with Omega caps.
double nu_factor(const std::vector<std::pair<std::uint64_t, int>>& fac);  // prod 1/e!
double nu_v(std::uint64_t n, int v, int ell);

// M_j(chi)^v computed both directly and through the nu_v identity.
struct MollifierPowerCheck {
  cplx direct_power;
  cplx nu_route;
};
MollifierPowerCheck mollifier_power_check(const DirichletCharacter& chi, int j, int v,
                                          const MollifierParams& params);

double s_jv(const DirichletCharacter& chi, int j, int v, const MollifierParams& params);
double d_jv(const DirichletCharacter& chi, int j, int v, const MollifierParams& params);

struct TrMembership {
  bool in_t_r = false;
  double max_abs = 0.0;  // max over u in [r, K] of |Re P_{I_r}(chi; u)|
  double bound = 0.0;    // ell_r / (v e^2)
};
TrMembership t_r_membership(const DirichletCharacter& chi, int r, const MollifierParams& params);

enum class PropCase { not_in_t0, in_all_t_r, first_failure_at };
struct MainPropCase {
  PropCase kind = PropCase::in_all_t_r;
  int first_failure = -1;  // the smallest r with chi not in T_r, when kind = first_failure_at
};
MainPropCase main_prop_case(const DirichletCharacter& chi, const MollifierParams& params);

// RHS of the conditional log|L(1/2, chi)| upper bound at prime-sum length x.
double log_l_upper_rhs(const DirichletCharacter& chi, double x, const MollifierParams& params);

struct MollifiedSecondMoment {
  cplx value;    // (1/|O|) sum L(1/2,chi eta1) L(1/2,conj(chi eta2)) M(chi eta1) conj(M(chi eta2))
  cplx b_const;  // predicted constant: L(1, eta) * Euler product over rho <= q^beta_K
  double b_tail_bound = 0.0;  // geometric bound on the degree-12 truncation of each factor
  cplx ratio;                 // value / b_const
};
MollifiedSecondMoment mollified_second_moment(const GaloisOrbit& orbit,
                                              const DirichletCharacter& eta1,
                                              const DirichletCharacter& eta2,
                                              const MollifierParams& params,
                                              const MomentOptions& opts = {});

struct MollifiedVthMoment {
  double value = 0.0;  // sum over primitive chi mod q of |L(1/2, chi) M(chi)|^v
  double ratio = 0.0;  // value / q
  std::uint64_t characters = 0;
};
MollifiedVthMoment mollified_vth_moment(ModulusPtr mod, int v, const MollifierParams& params,
                                        const MomentOptions& opts = {});

struct HolderLowerBound {
  std::uint64_t nonvanishing = 0;  // N: members with both mollified L-factors nonzero
  std::uint64_t orbit_size = 0;
  cplx s_avg;          // mollified second moment (orbit average)
  double f1_avg = 0.0;  // fourth-moment averages
  double f2_avg = 0.0;
  bool chain_ok = false;  // |S|^4 <= N^2 F1 F2 with 1e-9 relative slack (raw sums)
  double chain_slack = 0.0;
  double lower_bound_proportion = 0.0;  // |S_avg|^4 / (F1_avg F2_avg)
  double lower_bound_count = 0.0;       // |O| * proportion, <= N
};
HolderLowerBound holder_lower_bound(const GaloisOrbit& orbit, const DirichletCharacter& eta1,
                                    const DirichletCharacter& eta2,
                                    const MollifierParams& params,
                                    const MomentOptions& opts = {});

}  // namespace orbitlf
