#pragma once

#include "huberbound/real.hpp"

namespace hb {

// Point in the upper half-plane.
struct UhpPoint {
    Real x, y;
};

enum class DistanceConvention {
    kStandard,  // cosh d = 1 + |z-w|^2 / (2 Im z Im w)
    kNoFactorTwo,  // cosh d = 1 + |z-w|^2 / (Im z Im w)
};

Real hyp_dist(const UhpPoint& z, const UhpPoint& w, DistanceConvention conv);

}  // namespace hb
