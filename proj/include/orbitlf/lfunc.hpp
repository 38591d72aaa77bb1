#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "orbitlf/character.hpp"
#include "orbitlf/hurwitz.hpp"

namespace orbitlf {

// Contour parameters for the smoothed Mellin kernel
//   V(x) = (1/2*pi*i) integral over Re s = abscissa of
//          gammaR(s) G(s) x^(-s) / s ds,   G(s) = exp(s^2),
// with gammaR(s) the gamma-factor ratio attached to the parity pair.
// G is fixed (entire, even, G(0) = 1); the struct carries quadrature knobs.
struct SmoothingKernel {
  double T = 50.0;
  double delta = 0.05;
  double abscissa = 1.0;
};

struct VValue {
  double value = 0.0;       // V is real for this kernel (even weights in t)
  double quad_error = 0.0;  // |step delta vs 2*delta| self-consistency estimate
};

class VKernel {
public:
  VKernel(int kappa1, int kappa2, const SmoothingKernel& kernel = {});

  VValue eval(double x) const;  // requires x > 0

  // V(pi * u / scale) for u = 1..max_product, built blockwise in parallel;
  // per-entry results are independent, so the table is deterministic.
  std::vector<double> table(double scale, std::uint64_t max_product, unsigned threads = 1) const;

  // (1/2pi) integral |gammaR G / s| on Re s = c; |V(x)| <= envelope_constant(c) * x^(-c).
  double envelope_constant(double c) const;

  int kappa1() const { return k1_; }
  int kappa2() const { return k2_; }
  std::size_t samples() const { return t_.size(); }

private:
  cplx weight_at(const cplx& s) const;

  int k1_, k2_;
  SmoothingKernel kernel_;
  cplx norm_;               // gammaR denominator Gamma((1/2+k1)/2) Gamma((1/2+k2)/2)
  std::vector<double> t_;   // kept imaginary parts
  std::vector<cplx> w_;     // kept weights (delta/2pi) gammaR(s) G(s) / s
  std::vector<bool> even_;  // sample lies on the coarser 2*delta grid
};

// Spec-facing one-shot wrapper.
VValue v_kernel(double x, int kappa1, int kappa2, const SmoothingKernel& kernel = {});

// L(s, chi) by the Hurwitz decomposition L = q^-s sum_a chi(a) zeta(s, a/q).
// Rejects the principal character.
cplx l_value_oracle(const cplx& s, const DirichletCharacter& chi,
                    const HurwitzParams& params = {});

// Batch form: caches zeta(s, a/q) for all units a once, making each L-value
// a single O(q) weighted sum. Used by every orbit-sized workload.
class LValueTable {
public:
  LValueTable(ModulusPtr mod, const cplx& s, const HurwitzParams& params = {});
  cplx value(const DirichletCharacter& chi) const;
  const cplx& s() const { return s_; }

private:
  ModulusPtr mod_;
  cplx s_;
  cplx qpow_;  // q^(-s)
  std::vector<cplx> zeta_;
};

constexpr double kAfeDefaultMultiplier = 2000.0;

struct AfeRequest {
  DirichletCharacter chi;
  DirichletCharacter eta1;
  DirichletCharacter eta2;
  double X = 1.0;
  double tail_cutoff_multiplier = kAfeDefaultMultiplier;
  SmoothingKernel kernel{};
};

struct AfeResult {
  cplx total;
  cplx first_sum;
  cplx second_sum;
  cplx eps1;
  cplx eps2;       // root number of conj(chi * eta2)
  cplx prefactor;  // i^-(k1+k2) * eps1 * eps2
  int kappa1 = 0;
  int kappa2 = 0;
  std::uint64_t cutoff1 = 0;  // D1 = multiplier * qX / pi
  std::uint64_t cutoff2 = 0;  // D2 = multiplier * q / (pi X)
  std::uint64_t terms1 = 0;
  std::uint64_t terms2 = 0;
  double tail_bound = 0.0;  // analytic bound on both discarded tails (abscissa-4 decay)
  double quad_error = 0.0;
  double X = 1.0;
};

// Product L(1/2, chi*eta1) L(1/2, conj(chi*eta2)) by the balanced approximate
// functional equation. One evaluator serves a whole orbit: the V tables for
// both parity combinations and both scales are built eagerly and shared.
class AfeEvaluator {
public:
  AfeEvaluator(ModulusPtr mod, const DirichletCharacter& eta1, const DirichletCharacter& eta2,
               double X = 1.0, double multiplier = kAfeDefaultMultiplier,
               const SmoothingKernel& kernel = {}, unsigned threads = 1);

  AfeResult eval(const DirichletCharacter& chi) const;

  std::uint64_t cutoff1() const { return d1_; }
  std::uint64_t cutoff2() const { return d2_; }
  double X() const { return x_; }

private:
  struct SideTable {
    std::vector<double> v;  // indexed by the integer product mn
    double tail_bound = 0.0;
    double quad_error = 0.0;
  };
  const SideTable& side(int kappa1, int kappa2, bool first) const;

  ModulusPtr mod_;
  DirichletCharacter eta1_, eta2_;
  double x_;
  double mult_;
  SmoothingKernel kernel_;
  std::uint64_t d1_, d2_;
  std::vector<double> invsqrt_;
  std::map<std::pair<int, int>, std::pair<SideTable, SideTable>> tables_;
};

AfeResult afe_product(const AfeRequest& req);

// Completed-L functional equation defect at the point 1/2 + s; used by the
// lfunc invariants. Returns |Lambda_left - Lambda_right| (both also exposed).
struct FunctionalEquationCheck {
  cplx left;
  cplx right;
  double defect;
};
FunctionalEquationCheck functional_equation_check(const cplx& s, const DirichletCharacter& psi,
                                                  const HurwitzParams& params = {});

}  // namespace orbitlf
