#pragma once

#include "orbitlf/numeric.hpp"

namespace orbitlf {

// Euler-Maclaurin truncation depths. The defaults hold the remainder below
// 1e-12 throughout the region this project evaluates (Re s >= 0.4, |s| <= 10,
// a in (0,1]); for Re s well below 0 they would need larger N.
struct HurwitzParams {
  int shift = 30;  // N: initial direct terms
  int tail = 10;   // M: tail correction order (<= 12, table-limited)
};

// Hurwitz zeta zeta(s, a) for complex s != 1, real a in (0, 1].
cplx hurwitz_zeta(const cplx& s, double a, const HurwitzParams& params = {});

// Digamma for real x > 0 (recurrence shift past 12, then the asymptotic
// series). Carries the s = 1 special case of the L-value oracle, where the
// Hurwitz poles cancel against sum chi(a) = 0.
double digamma(double x);

}  // namespace orbitlf
