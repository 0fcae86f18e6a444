#pragma once

#include <functional>
#include <stdexcept>

#include "huberbound/real.hpp"

namespace hb {

struct QuadratureResult {
    Real value;
    Real error_estimate;
    long evaluations = 0;
};

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QuadOptions {
    int max_panels = 4000;
};

// Adaptive panel integration of f over (a, b) down to abs_tol, using an
// embedded 7/15-point Gauss pair generated at working precision. Endpoints
// may be +/- infinity (Real::pos_infinity / its negation); semi-infinite
// intervals are folded through t = a + u/(1-u). Throws QuadratureError if
// the panel budget is exhausted before the tolerance is met.
QuadratureResult quad(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                      const Real& abs_tol, const QuadOptions& opts = {});

}  // namespace hb
