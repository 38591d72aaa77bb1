#pragma once

#include "orbitlf/numeric.hpp"

namespace orbitlf {

// Complex gamma function, Lanczos approximation (g = 607/128, 15 terms),
// with the reflection formula for Re z < 1/2. Relative accuracy ~1e-14 on
// the strips used here (|Im z| <= ~60).
cplx cgamma(const cplx& z);
cplx clgamma(const cplx& z);  // principal branch of log Gamma

}  // namespace orbitlf
