#pragma once

#include <mpfr.h>

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace hb {

// Extended-precision real number backed by MPFR. Every value carries its own
// precision (mantissa bits, >= 64); binary operations run at the max of the
// operand precisions. Rounding is to nearest throughout.
class Real {
public:
    static constexpr long kMinPrecision = 64;

    static long default_precision() { return default_prec_.load(std::memory_order_relaxed); }
    static void set_default_precision(long bits) {
        if (bits < kMinPrecision) throw std::invalid_argument("precision must be >= 64 bits");
        default_prec_.store(bits, std::memory_order_relaxed);
    }

    Real() : Real(default_precision()) {}
    explicit Real(long prec) { init(prec); mpfr_set_zero(v_, 1); }
    Real(double x, long prec) { init(prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(long x, long prec) { init(prec); mpfr_set_si(v_, x, MPFR_RNDN); }

    // Implicit from double at the default precision: mirrors how the
    // literals in the constant tables are meant to be read.
    Real(double x) : Real(x, default_precision()) {}

    Real(const Real& o) { init(o.precision()); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.precision());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real from_string(std::string_view s, long prec = default_precision());

    long precision() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Decimal string with enough digits to round-trip at this precision.
    std::string str() const;
    // Fixed-point with `decimals` digits after the point ("%.Nf").
    std::string str_fixed(int decimals) const;
    // Scientific/shortest with `sig` significant digits.
    std::string str_sig(int sig) const;

    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    static Real pos_infinity(long prec = default_precision()) {
        Real r(prec);
        mpfr_set_inf(r.v_, 1);
        return r;
    }

    // Named constants at a given precision.
    static Real pi(long prec = default_precision());
    static Real e(long prec = default_precision());
    static Real euler_gamma(long prec = default_precision());
    static Real ln2(long prec = default_precision());

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }
    friend Real operator-(const Real& a) {
        Real r(a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    Real& operator+=(const Real& b) { return *this = *this + b; }
    Real& operator-=(const Real& b) { return *this = *this - b; }
    Real& operator*=(const Real& b) { return *this = *this * b; }
    Real& operator/=(const Real& b) { return *this = *this / b; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

private:
    using mpfr_binfun = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

    void init(long prec) {
        if (prec < kMinPrecision) throw std::invalid_argument("precision must be >= 64 bits");
        mpfr_init2(v_, prec);
    }

    static Real binop(const Real& a, const Real& b, mpfr_binfun f) {
        Real r(a.precision() > b.precision() ? a.precision() : b.precision());
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    static std::atomic<long> default_prec_;

    mpfr_t v_;
};

// Elementary functions; result precision follows the argument.
Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real pow(const Real& x, const Real& y);
Real sin(const Real& x);
Real cos(const Real& x);
Real tanh(const Real& x);
Real atan(const Real& x);
Real acosh(const Real& x);
Real floor(const Real& x);
Real hypot(const Real& x, const Real& y);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

}  // namespace hb
