#include "huberbound/real.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <vector>

namespace hb {

std::atomic<long> Real::default_prec_{128};

Real Real::from_string(std::string_view s, long prec) {
    Real r(prec);
    std::string buf(s);
    if (mpfr_set_str(r.v_, buf.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("Real::from_string: cannot parse '" + buf + "'");
    return r;
}

std::string Real::str() const {
    // bits * log10(2) digits round-trip; add slack for the directed rounding.
    int digits = static_cast<int>(precision() * 0.30103) + 3;
    return str_sig(digits);
}

std::string Real::str_sig(int sig) const {
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dRg", sig);
    char* out = nullptr;
    if (mpfr_asprintf(&out, fmt, v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

std::string Real::str_fixed(int decimals) const {
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dRf", decimals);
    char* out = nullptr;
    if (mpfr_asprintf(&out, fmt, v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

Real Real::pi(long prec) {
    Real r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real Real::e(long prec) {
    Real one(1.0, prec);
    Real r(prec);
    mpfr_exp(r.raw(), one.raw(), MPFR_RNDN);
    return r;
}

Real Real::euler_gamma(long prec) {
    Real r(prec);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

Real Real::ln2(long prec) {
    Real r(prec);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

namespace {
template <typename F>
Real unary(const Real& x, F f) {
    Real r(x.precision());
    f(r.raw(), x.raw());
    return r;
}
}  // namespace

Real abs(const Real& x) { return unary(x, [](mpfr_ptr o, mpfr_srcptr i) { mpfr_abs(o, i, MPFR_RNDN); }); }
Real sqrt(const Real& x) { return unary(x, [](mpfr_ptr o, mpfr_srcptr i) { mpfr_sqrt(o, i, MPFR_RNDN); }); }
Real exp(const Real& x) { return unary(x, [](mpfr_ptr o, mpfr_srcptr i) { mpfr_exp(o, i, MPFR_RNDN); }); }
Real log(const Real& x) { return unary(x, [](mpfr_ptr o, mpfr_srcptr i) { mpfr_log(o, i, MPFR_RNDN); }); }
Real sin(const Real& x) { return unary(x, [](mpfr_ptr o, mpfr_srcptr i) { mpfr_sin(o, i, MPFR_RNDN); }); }
Real cos(const Real& x) { return unary(x, [](mpfr_ptr o, mpfr_srcptr i) { mpfr_cos(o, i, MPFR_RNDN); }); }
Real tanh(const Real& x) { return unary(x, [](mpfr_ptr o, mpfr_srcptr i) { mpfr_tanh(o, i, MPFR_RNDN); }); }
Real atan(const Real& x) { return unary(x, [](mpfr_ptr o, mpfr_srcptr i) { mpfr_atan(o, i, MPFR_RNDN); }); }
Real acosh(const Real& x) { return unary(x, [](mpfr_ptr o, mpfr_srcptr i) { mpfr_acosh(o, i, MPFR_RNDN); }); }
Real floor(const Real& x) { return unary(x, [](mpfr_ptr o, mpfr_srcptr i) { mpfr_floor(o, i); }); }

Real pow(const Real& x, const Real& y) {
    Real r(std::max(x.precision(), y.precision()));
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real hypot(const Real& x, const Real& y) {
    Real r(std::max(x.precision(), y.precision()));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

}  // namespace hb
