#include "huberbound/special.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace hb {

Real li0(const Real& x) {
    if (!x.is_finite() || !(x > Real(1.0, x.precision())))
        throw std::domain_error("li0: requires x > 1");
    // Guard digits: Ei amplifies the argument error of log(x) near 1.
    long prec = x.precision() + 16;
    Real lx(prec);
    mpfr_log(lx.raw(), x.raw(), MPFR_RNDN);
    Real r(prec);
    mpfr_eint(r.raw(), lx.raw(), MPFR_RNDN);
    Real out(x.precision());
    mpfr_set(out.raw(), r.raw(), MPFR_RNDN);
    return out;
}

Real li2(const Real& x) {
    if (!x.is_finite() || x < Real(2.0, x.precision()))
        throw std::domain_error("li2: requires x >= 2");
    return li0(x) - li0(Real(2.0, x.precision()));
}

Real erf(const Real& x) {
    if (x.is_nan()) throw std::domain_error("erf: non-finite input");
    Real r(x.precision());
    mpfr_erf(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

namespace {

// Minimal complex pair over Real, enough for the digamma evaluation.
struct CReal {
    Real re, im;

    CReal(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    CReal operator+(const CReal& o) const { return {re + o.re, im + o.im}; }
    CReal operator-(const CReal& o) const { return {re - o.re, im - o.im}; }
    CReal operator*(const CReal& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CReal inv() const {
        Real d = re * re + im * im;
        return {re / d, -im / d};
    }
    Real abs() const { return hypot(re, im); }
    CReal log() const {
        // principal branch; re > 0 on the shifted digamma path
        Real prec_zero(0.0, re.precision());
        return {hb::log(abs()), atan2_(im, re)};
    }

private:
    static Real atan2_(const Real& y, const Real& x) {
        Real r(std::max(y.precision(), x.precision()));
        mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
        return r;
    }
};

// B_2, B_4, ..., B_40 as exact fractions.
constexpr std::array<std::pair<const char*, const char*>, 20> kBernoulli = {{
    {"1", "6"},
    {"-1", "30"},
    {"1", "42"},
    {"-1", "30"},
    {"5", "66"},
    {"-691", "2730"},
    {"7", "6"},
    {"-3617", "510"},
    {"43867", "798"},
    {"-174611", "330"},
    {"854513", "138"},
    {"-236364091", "2730"},
    {"8553103", "6"},
    {"-23749461029", "870"},
    {"8615841276005", "14322"},
    {"-7709321041217", "510"},
    {"2577687858367", "6"},
    {"-26315271553053477373", "1919190"},
    {"2929993913841559", "6"},
    {"-261082718496449122051", "13530"},
}};

}  // namespace

Real digamma_abs(const Real& r) {
    if (!r.is_finite() || r.sign() < 0)
        throw std::domain_error("digamma_abs: requires finite r >= 0");
    long prec = r.precision() + 32;
    Real one(1.0, prec), zero(0.0, prec);
    Real rr(prec);
    mpfr_set(rr.raw(), r.raw(), MPFR_RNDN);

    // Shift threshold scaled so the truncated Stirling tail stays below the
    // target accuracy (first omitted term ~ B_42/(42 |z|^42), with slack for
    // arguments near the imaginary axis).
    double expo = (38.0 + static_cast<double>(prec)) / 42.0;
    if (expo > 17.0) expo = 17.0;
    Real threshold(4.0 * std::pow(2.0, expo), prec);

    CReal z(one, rr);
    CReal acc(zero, zero);
    while (z.abs() < threshold) {        // psi(z) = psi(z+1) - 1/z
        acc = acc - z.inv();
        z = z + CReal(one, zero);
    }
    // Stirling: psi(z) ~ log z - 1/(2z) - sum B_2n / (2n z^{2n})
    CReal res = acc + z.log();
    CReal zinv = z.inv();
    res = res - CReal(Real(0.5, prec), zero) * zinv;
    CReal zinv2 = zinv * zinv;
    CReal zp = zinv2;
    for (size_t n = 0; n < kBernoulli.size(); ++n) {
        Real coef = Real::from_string(kBernoulli[n].first, prec) /
                    (Real::from_string(kBernoulli[n].second, prec) *
                     Real(static_cast<long>(2 * (n + 1)), prec));
        res = res - CReal(coef, zero) * zp;
        zp = zp * zinv2;
    }
    Real out(r.precision());
    mpfr_set(out.raw(), res.abs().raw(), MPFR_RNDN);
    return out;
}

}  // namespace hb
