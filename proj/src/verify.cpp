#include "huberbound/verify.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "huberbound/quadrature.hpp"
#include "huberbound/special.hpp"

namespace hb {

namespace {

long pick_prec(long req) { return req > 0 ? req : std::max<long>(128, Real::default_precision()); }

Real li_sum(const Real& x, const std::vector<Real>& small_s, LiConvention conv, long prec) {
    Real total(0.0, prec);
    Real li02 = li0(Real(2.0, prec));
    for (const auto& s : small_s) {
        Real arg = pow(x, s);
        Real v = li0(arg);
        if (conv == LiConvention::kLi2) v -= li02;
        total += v;
    }
    return total;
}

}  // namespace

const TieOrder& modular_reference_tie_order() {
    static const TieOrder order = {
        {6, {32, 8}},
        {18, {80, 20, 320}},
    };
    return order;
}

std::vector<PgtRow> pgt_table(const LengthSpectrum& s, const std::vector<Real>& small_s,
                              const PgtOptions& opts) {
    long prec = pick_prec(opts.prec);
    auto aggs = aggregate(s, prec);
    if (aggs.empty()) throw std::domain_error("pgt_table: empty spectrum");

    if (opts.tie_order) {
        for (const auto& [trace, seq] : *opts.tie_order) {
            auto lo = std::find_if(aggs.begin(), aggs.end(),
                                   [&](const SpectrumAggregate& a) { return a.trace_pow == trace; });
            auto hi = lo;
            while (hi != aggs.end() && hi->trace_pow == trace) ++hi;
            if (lo == aggs.end()) continue;
            std::sort(lo, hi, [&](const SpectrumAggregate& a, const SpectrumAggregate& b) {
                auto pos = [&](const Int& d) {
                    for (size_t i = 0; i < seq.size(); ++i)
                        if (d == seq[i]) return i;
                    return seq.size();
                };
                size_t pa = pos(a.d), pb = pos(b.d);
                if (pa != pb) return pa < pb;
                return a.d < b.d;
            });
        }
    }

    std::vector<PgtRow> rows;
    rows.reserve(aggs.size());
    long running = 0;
    for (const auto& a : aggs) {
        running += a.multiplicity;
        PgtRow r{a.norm, a.multiplicity, a.d, Real(prec), running,
                 Real(prec), Real(prec), Real(prec), Real(prec), Real(prec), Real(prec)};
        r.li = li_sum(a.norm, small_s, LiConvention::kLi0, prec);
        Real pi_r(static_cast<long>(running), prec);
        r.li_over_pi = r.li / pi_r;
        r.abs_err = abs(r.li - pi_r);
        Real lx = log(a.norm);
        r.x34_over_sqrtlog = pow(a.norm, Real(0.75, prec)) / sqrt(lx);
        r.ratio_col9 = r.abs_err / r.x34_over_sqrtlog;
        r.sqrt_x = sqrt(a.norm);
        r.ratio_col11 = r.abs_err / r.sqrt_x;
        rows.push_back(std::move(r));
    }
    return rows;
}

void export_pgt_csv(const std::vector<PgtRow>& rows, std::ostream& out, int decimals) {
    out << "norm,multiplicity,discriminant,li,pi_running,li_over_pi,abs_err,"
           "x34_over_sqrtlog,err_over_x34_sqrtlog,sqrt_x,err_over_sqrt_x\n";
    for (const auto& r : rows) {
        out << r.norm.str_fixed(decimals) << ',' << r.multiplicity << ',' << r.d.str() << ','
            << r.li.str_fixed(decimals) << ',' << r.pi_running << ','
            << r.li_over_pi.str_fixed(decimals) << ',' << r.abs_err.str_fixed(decimals) << ','
            << r.x34_over_sqrtlog.str_fixed(decimals) << ',' << r.ratio_col9.str_fixed(decimals)
            << ',' << r.sqrt_x.str_fixed(decimals) << ',' << r.ratio_col11.str_fixed(decimals)
            << '\n';
    }
}

EmpiricalHuber empirical_huber(const LengthSpectrum& s, const std::vector<Real>& small_s,
                               const EmpiricalHuberOptions& opts) {
    long prec = pick_prec(opts.prec);
    if (s.entries.empty()) throw std::domain_error("empirical_huber: empty spectrum");

    // merge jumps by exact norm (equal trace_pow)
    std::vector<std::pair<Real, long>> jumps;  // (norm, total multiplicity)
    Int last_trace = 0;
    for (const auto& a : aggregate(s, prec)) {
        if (!jumps.empty() && a.trace_pow == last_trace) {
            jumps.back().second += a.multiplicity;
        } else {
            jumps.emplace_back(a.norm, a.multiplicity);
            last_trace = a.trace_pow;
        }
    }
    return empirical_huber_from_jumps(jumps, small_s, opts);
}

EmpiricalHuber empirical_huber_from_jumps(const std::vector<std::pair<Real, long>>& jumps,
                                          const std::vector<Real>& small_s,
                                          const EmpiricalHuberOptions& opts) {
    long prec = pick_prec(opts.prec);
    if (jumps.empty()) throw std::domain_error("empirical_huber: empty spectrum");
    if (small_s.empty() || !(small_s.front() == Real(1.0, prec)))
        throw std::domain_error("empirical_huber: small_s must start with s_0 = 1");

    auto weight = [prec](const Real& x) { return log(x) / pow(x, Real(0.75, prec)); };
    auto err_at = [&](const Real& x, long pi) {
        return abs(Real(pi, prec) - li_sum(x, small_s, opts.convention, prec)) * weight(x);
    };

    EmpiricalHuber out{Real(0.0, prec), Real(0.0, prec), "", Real(0.0, prec), Real(0.0, prec), 0};
    long pi = 0;
    for (size_t i = 0; i < jumps.size(); ++i) {
        const Real& x = jumps[i].first;
        if (i > 0) {
            Real la = log(jumps[i - 1].first), lb = log(x);
            for (int g = 1; g < opts.grid_per_gap; ++g) {
                Real xg = exp(la + (lb - la) * Real(static_cast<long>(g), prec) /
                                       Real(static_cast<long>(opts.grid_per_gap), prec));
                Real v = err_at(xg, pi);
                ++out.evaluation_points;
                if (v > out.sup_value) {
                    out.sup_value = v;
                    out.sup_at = xg;
                    out.sup_side = "grid";
                }
            }
        }
        Real pre = err_at(x, pi);
        ++out.evaluation_points;
        if (pre > out.sup_value) {
            out.sup_value = pre;
            out.sup_at = x;
            out.sup_side = "pre";
        }
        pi += jumps[i].second;
        Real post = err_at(x, pi);
        ++out.evaluation_points;
        if (post > out.sup_value) {
            out.sup_value = post;
            out.sup_at = x;
            out.sup_side = "post";
        }
        if (post > out.jump_value) {
            out.jump_value = post;
            out.jump_at = x;
        }
    }
    return out;
}

Real chebyshev(const LengthSpectrum& s, const Real& T, ChebyshevKind kind, long prec_in) {
    long prec = pick_prec(prec_in);
    Real x = (kind == ChebyshevKind::kBigThetaNorm) ? T : exp(T);
    if (x > s.x_max * (Real(1.0, prec) + Real(1e-12, prec)))
        throw std::domain_error("chebyshev: cutoff exceeds spectrum completeness bound");
    Real total(0.0, prec);
    Real one(1.0, prec);
    for (const auto& e : s.entries) {
        Real n0 = e.norm(prec);
        if (n0 > x) continue;
        Real lam = log(n0) * Real(e.multiplicity, prec);
        if (kind == ChebyshevKind::kTheta || kind == ChebyshevKind::kBigThetaNorm) {
            total += lam;
            continue;
        }
        Real nm = n0;
        while (nm <= x) {
            if (kind == ChebyshevKind::kPsi) {
                total += lam;
            } else {  // kH
                Real inv = one / nm;
                total += lam * (one + inv) / (one - inv);
            }
            nm *= n0;
        }
    }
    return total;
}

LemmaReport karamata_check(const StepFunction& alpha, const Real& C, const Real& d_param,
                           int s_grid_points) {
    long prec = std::max<long>(128, Real::default_precision());
    LemmaReport rep;
    rep.id = "karamata";
    rep.claim = "f(s) <= C/s on (0,d] implies alpha(t) <= 3 C t for t >= 1/d";
    rep.grid = std::to_string(s_grid_points) + " log-spaced s points on (0, d]";
    Real prev_t(-1.0, prec);
    for (const auto& [t, j] : alpha.jumps) {
        if (t < prev_t) throw std::domain_error("karamata_check: jumps not sorted");
        if (j.sign() < 0) throw std::domain_error("karamata_check: negative jump");
        prev_t = t;
    }

    auto f_of = [&](const Real& sv) {
        Real acc(0.0, prec);
        for (const auto& [t, j] : alpha.jumps) acc += j * exp(-sv * t);
        return acc;
    };
    auto alpha_of = [&](const Real& tv) {
        Real acc(0.0, prec);
        for (const auto& [t, j] : alpha.jumps)
            if (t <= tv) acc += j;
        return acc;
    };

    Real worst = Real::pos_infinity(prec);
    bool hyp_ok = true;
    // log grid on (0, d]: s = d * 10^{-4 k / (n-1)}
    for (int k = 0; k < s_grid_points; ++k) {
        Real expo = Real(-4.0, prec) * Real(static_cast<long>(k), prec) /
                    Real(static_cast<long>(s_grid_points - 1), prec);
        Real sv = d_param * pow(Real(10.0, prec), expo);
        Real margin = C / sv - f_of(sv);
        if (margin < worst) worst = margin;
        if (margin.sign() < 0) hyp_ok = false;
    }
    bool con_ok = true;
    Real three_c = Real(3.0, prec) * C;
    Real tmin = Real(1.0, prec) / d_param;
    auto check_t = [&](const Real& tv) {
        Real margin = three_c * tv - alpha_of(tv);
        if (margin < worst) worst = margin;
        if (margin.sign() < 0) con_ok = false;
    };
    check_t(tmin);
    for (const auto& [t, j] : alpha.jumps)
        if (t >= tmin) check_t(t);

    rep.worst_margin = worst;
    rep.pass = hyp_ok && con_ok;
    if (!hyp_ok)
        rep.detail = con_ok ? "hypothesis failed" : "hypothesis and conclusion failed";
    else if (!con_ok)
        rep.detail = "hypothesis held but conclusion failed";
    else
        rep.detail = "hypothesis and conclusion hold";
    return rep;
}

namespace {

struct Bump {
    long prec;
    Real c0, scale;  // scale = sqrt(2 pi)/c0

    explicit Bump(long p) : prec(p), c0(p), scale(p) {
        Real one(1.0, prec);
        auto f = [this](const Real& x) {
            Real one(1.0, prec);
            return exp(one / (x * x - one));
        };
        c0 = quad(f, -one, one, Real(1e-30, prec)).value;
        scale = sqrt(Real(2.0, prec) * Real::pi(prec)) / c0;
    }

    Real phi(const Real& x) const {
        Real one(1.0, prec);
        if (abs(x) >= one) return Real(0.0, prec);
        return scale * exp(one / (x * x - one));
    }
    Real phipp(const Real& x) const {
        Real one(1.0, prec);
        Real x2 = x * x;
        Real den = (x2 - one);
        Real den4 = den * den * den * den;
        return Real(2.0, prec) * phi(x) * (Real(3.0, prec) * x2 * x2 - one) / den4;
    }
    // phi-hat(i a) = (1/sqrt(2 pi)) integral phi(y) e^{a y} dy  (real a)
    Real hat_imag_axis(const Real& a) const {
        Real one(1.0, prec);
        auto f = [this, &a](const Real& y) { return phi(y) * exp(a * y); };
        Real v = quad(f, -one, one, Real(1e-25, prec)).value;
        return v / sqrt(Real(2.0, prec) * Real::pi(prec));
    }
    // |phi-hat(r + i t)|
    Real hat_abs(const Real& r, const Real& t) const {
        Real one(1.0, prec);
        auto fre = [this, &r, &t](const Real& y) { return phi(y) * exp(t * y) * cos(r * y); };
        auto fim = [this, &r, &t](const Real& y) { return phi(y) * exp(t * y) * sin(r * y); };
        QuadOptions qo;
        qo.max_panels = 8000;
        Real re = quad(fre, -one, one, Real(1e-22, prec), qo).value;
        Real im = quad(fim, -one, one, Real(1e-22, prec), qo).value;
        return hypot(re, im) / sqrt(Real(2.0, prec) * Real::pi(prec));
    }
};

}  // namespace

BumpConstants bump_constants(long prec_in) {
    long prec = pick_prec(prec_in);
    Bump bump(prec);
    BumpConstants out{bump.c0, Real(0.0, prec), {}, {}};

    // max |phi''| by dense grid + golden-section refinement
    Real one(1.0, prec);
    const int grid_n = 2000;
    Real best_x(0.0, prec), best(0.0, prec);
    for (int i = 1; i < grid_n; ++i) {
        Real x = Real(-1.0, prec) + Real(2.0 * i / grid_n, prec);
        Real v = abs(bump.phipp(x));
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    {
        Real gr(0.6180339887498949, prec);
        Real a = best_x - Real(2.0 / grid_n, prec), b = best_x + Real(2.0 / grid_n, prec);
        Real c = b - gr * (b - a), d = a + gr * (b - a);
        for (int it = 0; it < 200; ++it) {
            if (abs(bump.phipp(c)) > abs(bump.phipp(d))) b = d; else a = c;
            c = b - gr * (b - a);
            d = a + gr * (b - a);
        }
        Real v = abs(bump.phipp((a + b) / Real(2.0, prec)));
        if (v > best) best = v;
    }
    out.phi_pp_max = best;

    // |phi-hat(i eps sigma) - 1| <= (2e - 2) eps over eps in {1e-3..1}, sigma in [-1/2, 1]
    {
        LemmaReport rep;
        rep.id = "bump-flatness";
        rep.claim = "|phi-hat(i eps sigma) - 1| <= (2e-2) eps, eps in (0,1], sigma in [-1/2,1]";
        rep.grid = "eps in {1e-3,1e-2,1e-1,0.3,1} x 13 sigma points";
        Real C1 = Real(2.0, prec) * Real::e(prec) - Real(2.0, prec);
        Real worst = Real::pos_infinity(prec);
        for (double ev : {1e-3, 1e-2, 1e-1, 0.3, 1.0}) {
            Real eps(ev, prec);
            for (int i = 0; i <= 12; ++i) {
                Real sigma = Real(-0.5, prec) + Real(1.5 * i / 12.0, prec);
                Real lhs = abs(bump.hat_imag_axis(eps * sigma) - one);
                Real margin = C1 * eps - lhs;
                if (margin < worst) worst = margin;
            }
        }
        rep.worst_margin = worst;
        rep.pass = worst.sign() >= 0;
        out.c1_margin = rep;
    }

    // |phi-hat(r + i t)| <= C2 (1+|r|)^{-2}, t = +/- 1/2, r in [0, 200]
    {
        LemmaReport rep;
        rep.id = "bump-decay";
        rep.claim = "|phi-hat(r+it)| <= (848/sqrt(2 pi)) e^{1/2} (1+r)^{-2}, |t| = 1/2";
        rep.grid = "41 r points on [0, 200], t = +/- 1/2";
        Real C2 = Real(848.0, prec) / sqrt(Real(2.0, prec) * Real::pi(prec)) * sqrt(Real::e(prec));
        Real worst = Real::pos_infinity(prec);
        for (int i = 0; i <= 40; ++i) {
            Real r(5.0 * i, prec);
            for (double tv : {0.5, -0.5}) {
                Real t(tv, prec);
                Real lhs = bump.hat_abs(r, t);
                Real bound = C2 / ((one + r) * (one + r));
                Real margin = bound - lhs;
                if (margin < worst) worst = margin;
            }
        }
        rep.worst_margin = worst;
        rep.pass = worst.sign() >= 0;
        out.c2_margin = rep;
    }
    return out;
}

namespace {

std::vector<Real> log_grid(const Real& lo, const Real& hi, int n, long prec) {
    std::vector<Real> out;
    Real la = log(lo), lb = log(hi);
    for (int i = 0; i < n; ++i) {
        Real f = Real(static_cast<long>(i), prec) / Real(static_cast<long>(n - 1), prec);
        out.push_back(exp(la + (lb - la) * f));
    }
    return out;
}

}  // namespace

std::vector<LemmaReport> lemma_suite(const LemmaSuiteOptions& opts) {
    long prec = pick_prec(opts.prec);
    std::vector<LemmaReport> reports;
    const Real one(1.0, prec), two(2.0, prec), four(4.0, prec);
    const Real pi = Real::pi(prec);
    const Real inf = Real::pos_infinity(prec);
    auto tgrid = log_grid(Real(1e-4, prec), Real(5.0, prec), opts.t_points, prec);

    // (i) parabolic term: int e^{-t r^2} (4 r^{1/4} + 4) dr <= 27/t, and
    //     log 2 / sqrt(4 pi t) <= (1/2)/t, both on (0, 5]
    {
        LemmaReport rep;
        rep.id = "parabolic-term";
        rep.claim = "int_R e^{-t r^2}(4|r|^{1/4}+4) dr <= 27/t and log2/sqrt(4 pi t) <= 1/(2t)";
        rep.grid = std::to_string(opts.t_points) + " log t points on (1e-4, 5]";
        Real worst = inf;
        for (const auto& t : tgrid) {
            auto f = [&](const Real& r) {
                return exp(-t * r * r) * (four * pow(r, Real(0.25, prec)) + four);
            };
            Real lhs = two * quad(f, Real(0.0, prec), inf, Real(1e-16, prec)).value;
            Real m1 = Real(27.0, prec) / t - lhs;
            Real m2 = Real(0.5, prec) / t - Real::ln2(prec) / sqrt(four * pi * t);
            if (m1 < worst) worst = m1;
            if (m2 < worst) worst = m2;
        }
        rep.worst_margin = worst;
        rep.pass = worst >= -Real(1e-9, prec);
        reports.push_back(rep);
    }

    // (ii) digamma growth: |psi(1+ir)| <= 4 r^{1/4} + 4 on [0, 1e4]
    {
        LemmaReport rep;
        rep.id = "digamma-growth";
        rep.claim = "|psi(1+ir)| <= 4 r^{1/4} + 4 on [0, 1e4]";
        rep.grid = std::to_string(opts.r_points) + " log r points on (1e-3, 1e4] plus r = 0";
        Real worst = inf;
        auto rg = log_grid(Real(1e-3, prec), Real(1e4, prec), opts.r_points, prec);
        rg.insert(rg.begin(), Real(0.0, prec));
        for (const auto& r : rg) {
            Real m = four * pow(r, Real(0.25, prec)) + four - digamma_abs(r);
            if (m < worst) worst = m;
        }
        rep.worst_margin = worst;
        rep.pass = worst >= -Real(1e-9, prec);
        reports.push_back(rep);
    }

    // (iii) elliptic term identity: int f_theta = 1/(2 theta) + 1/(2(pi-theta))
    {
        LemmaReport rep;
        rep.id = "elliptic-term";
        rep.claim = "int f_theta(r) dr = 1/(2 theta) + 1/(2(pi-theta)) within 1e-10";
        rep.grid = "theta in {pi/6, 2pi/6, ..., 5pi/6}";
        Real worst = inf;
        for (int k = 1; k <= 5; ++k) {
            Real theta = pi * Real(static_cast<long>(k), prec) / Real(6.0, prec);
            auto f = [&](const Real& r) {
                if (r.sign() >= 0) return exp(-two * r * theta);
                return exp(two * r * (pi - theta));
            };
            Real got = quad(f, -inf, inf, Real(1e-18, prec)).value;
            Real want = one / (two * theta) + one / (two * (pi - theta));
            Real m = Real(1e-10, prec) - abs(got - want);
            if (m < worst) worst = m;
        }
        rep.worst_margin = worst;
        rep.pass = worst.sign() >= 0;
        reports.push_back(rep);
    }

    // (iv) identity term: |int_R r e^{-r^2 t} tanh(pi r) dr| <= 1/t
    {
        LemmaReport rep;
        rep.id = "identity-term";
        rep.claim = "int_R r e^{-r^2 t} tanh(pi r) dr <= 1/t (scaled by |F|/4pi)";
        rep.grid = std::to_string(opts.t_points / 8) + " log t points on (1e-4, 5]";
        Real worst = inf;
        auto tg = log_grid(Real(1e-4, prec), Real(5.0, prec), std::max(2, opts.t_points / 8), prec);
        for (const auto& t : tg) {
            auto f = [&](const Real& r) { return r * exp(-r * r * t) * tanh(pi * r); };
            Real lhs = two * quad(f, Real(0.0, prec), inf, Real(1e-16, prec)).value;
            Real m = one / t - lhs;
            if (m < worst) worst = m;
        }
        rep.worst_margin = worst;
        rep.pass = worst >= -Real(1e-9, prec);
        reports.push_back(rep);
    }

    // (v) hyperbolic term tail bound: e^t + 1/sqrt(4 pi t) <= 745/t on (0,5]
    {
        LemmaReport rep;
        rep.id = "hyperbolic-term";
        rep.claim = "e^t + 1/sqrt(4 pi t) <= 745/t on (0, 5]";
        rep.grid = std::to_string(opts.t_points) + " log t points on (1e-4, 5] plus t = 5";
        Real worst = inf;
        auto tg = tgrid;
        tg.push_back(Real(5.0, prec));
        for (const auto& t : tg) {
            Real m = Real(745.0, prec) / t - (exp(t) + one / sqrt(four * pi * t));
            if (m < worst) worst = m;
        }
        rep.worst_margin = worst;
        rep.pass = worst >= -Real(1e-9, prec);
        reports.push_back(rep);
    }

    // (vi) li offset: |int_c^x y^{s-1}/log y dy - li0(x^s)| <= C21
    {
        LemmaReport rep;
        rep.id = "li-offset";
        rep.claim = "|int_c^x y^{s-1}/log y dy - li0(x^s)| <= |c-2|/log2 + |2-sqrt c| 2/log c";
        rep.grid = std::to_string(opts.s_points) + " s x " + std::to_string(opts.x_points) +
                   " x points, s in [1/2,1], x in [c, 1e4]";
        const Real& c = opts.c;
        Real C21 = abs(c - two) / Real::ln2(prec) + abs(two - sqrt(c)) * two / log(c);
        Real worst = inf;
        for (int i = 0; i < opts.s_points; ++i) {
            Real s = Real(0.5, prec) +
                     Real(0.5, prec) * Real(static_cast<long>(i), prec) /
                         Real(static_cast<long>(opts.s_points - 1), prec);
            for (const auto& x : log_grid(c, Real(1e4, prec), opts.x_points, prec)) {
                auto f = [&](const Real& y) { return pow(y, s - one) / log(y); };
                Real integral = quad(f, c, x, Real(1e-14, prec)).value;
                Real diff = abs(integral - li0(pow(x, s)));
                Real m = C21 - diff;
                if (m < worst) worst = m;
            }
        }
        rep.worst_margin = worst;
        rep.pass = worst >= -Real(1e-9, prec);
        reports.push_back(rep);
    }

    // (vii) report-only: empirical kappa(x) = li0(x) log x / x, and the note
    //       that the C22 slot is negative so li(x) <= C22 x/log x cannot hold.
    {
        LemmaReport rep;
        rep.id = "li-ratio";
        rep.claim = "li(x) <= C22 x/log x is not certifiable: C22 = 1/(1-1/log 2) < 0";
        rep.grid = "1024 log x points on [2, 1e6]";
        Real kappa_max(0.0, prec), at(0.0, prec);
        for (const auto& x : log_grid(Real(2.0, prec), Real(1e6, prec), 1024, prec)) {
            Real k = li0(x) * log(x) / x;
            if (k > kappa_max) {
                kappa_max = k;
                at = x;
            }
        }
        rep.worst_margin = kappa_max;  // informational: empirical max of the ratio
        rep.pass = true;
        rep.report_only = true;
        std::ostringstream det;
        det << "empirical max li0(x) log x / x = " << kappa_max.str_sig(10) << " at x = "
            << at.str_sig(8) << "; C22 = " << (one / (one - one / Real::ln2(prec))).str_sig(10)
            << " is negative";
        rep.detail = det.str();
        reports.push_back(rep);
    }
    return reports;
}

std::string lemma_report_text(const std::vector<LemmaReport>& reports) {
    std::ostringstream out;
    for (const auto& r : reports) {
        out << (r.report_only ? "[REPORT]" : (r.pass ? "[PASS]  " : "[FAIL]  ")) << ' ' << r.id
            << ": " << r.claim << "\n          grid: " << r.grid
            << "\n          worst margin: " << r.worst_margin.str_sig(10);
        if (!r.detail.empty()) out << "\n          " << r.detail;
        out << "\n";
    }
    return out.str();
}

}  // namespace hb
