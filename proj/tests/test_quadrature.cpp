#include <doctest.h>

#include "huberbound/quadrature.hpp"
#include "huberbound/special.hpp"

using hb::Real;

namespace {
const long P = 160;
bool close(const Real& a, const Real& b, double tol) { return abs(a - b) < Real(tol, 256); }
}  // namespace

TEST_CASE("gaussian moments") {
    Real inf = Real::pos_infinity(P);
    auto f = [](const Real& r) { return r * exp(-r * r); };
    auto res = hb::quad(f, Real(0.0, P), inf, Real(1e-20, P));
    CHECK(close(res.value, Real(0.5, P), 1e-20));
    CHECK(res.error_estimate >= Real(0.0, P));
    CHECK(res.evaluations > 0);

    for (double t : {0.1, 1.0, 5.0}) {
        auto g = [t](const Real& r) { return r * exp(-r * r * Real(t, P)); };
        auto rt = hb::quad(g, Real(0.0, P), inf, Real(1e-20, P));
        CHECK(close(rt.value, Real(0.5, P) / Real(t, P), 1e-18));
    }
}

TEST_CASE("two-sided elliptic kernel integral") {
    Real inf = Real::pos_infinity(P);
    Real pi = Real::pi(P);
    Real theta = pi / Real(2.0, P);
    auto f = [&](const Real& r) {
        if (r.sign() >= 0) return exp(-Real(2.0, P) * r * theta);
        return exp(Real(2.0, P) * r * (pi - theta));
    };
    auto res = hb::quad(f, -inf, inf, Real(1e-18, P));
    CHECK(close(res.value, Real(2.0, P) / pi, 1e-15));
}

TEST_CASE("cross-operation consistency with li") {
    auto invlog = [](const Real& y) { return Real(1.0, P) / log(y); };
    auto r = hb::quad(invlog, Real(2.0, P), Real(4.0, P), Real(1e-12, P));
    CHECK(close(r.value, hb::li2(Real(4.0, P)), 1e-11));
    CHECK(close(r.value, Real::from_string("1.92242131492155809316616", 256), 1e-11));

    // li0(x) - li0(y) = int_y^x dt/log t on wide ranges
    const double pairs[][2] = {{2.0, 10.0}, {5.0, 100.0}, {100.0, 1e4}, {1e4, 1e6}};
    for (auto& pr : pairs) {
        Real y(pr[0], P), x(pr[1], P);
        auto q = hb::quad(invlog, y, x, Real(1e-12, P));
        CHECK(close(q.value, hb::li0(x) - hb::li0(y), 1e-10));
    }
}

TEST_CASE("failure is explicit") {
    // highly oscillatory with a tiny panel budget
    auto f = [](const Real& x) { return sin(Real(5000.0, P) * x); };
    hb::QuadOptions opts;
    opts.max_panels = 10;
    CHECK_THROWS_AS(hb::quad(f, Real(0.0, P), Real(1.0, P), Real(1e-30, P), opts),
                    hb::QuadratureError);
    CHECK_THROWS_AS(hb::quad(f, Real(0.0, P), Real(1.0, P), Real(0.0, P)), std::domain_error);
}
