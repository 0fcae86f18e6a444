#include "huberbound/hyperbolic.hpp"

#include <stdexcept>

namespace hb {

Real hyp_dist(const UhpPoint& z, const UhpPoint& w, DistanceConvention conv) {
    long prec = std::max({z.x.precision(), z.y.precision(), w.x.precision(), w.y.precision()});
    Real zero(0.0, prec);
    if (!(z.y > zero) || !(w.y > zero))
        throw std::domain_error("hyp_dist: points must have positive imaginary part");
    Real dx = z.x - w.x, dy = z.y - w.y;
    Real num = dx * dx + dy * dy;
    Real den = z.y * w.y;
    if (conv == DistanceConvention::kStandard) den *= Real(2.0, prec);
    return acosh(Real(1.0, prec) + num / den);
}

}  // namespace hb
