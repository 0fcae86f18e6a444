#pragma once

#include "huberbound/real.hpp"

namespace hb {

// Principal-value logarithmic integral li(x) = Ei(log x), x > 1.
// Matches the eint-based definition used by the reference CSV data.
Real li0(const Real& x);

// Offset logarithmic integral from 2: li2(x) = li0(x) - li0(2), x >= 2.
Real li2(const Real& x);

// |psi(1 + i r)| for r >= 0, where psi is the digamma function.
// Recurrence shift until |z| >= 16, then the Stirling series with 10
// Bernoulli terms.
Real digamma_abs(const Real& r);

// Error function.
Real erf(const Real& x);

}  // namespace hb
