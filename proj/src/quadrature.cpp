#include "huberbound/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>
#include <vector>

namespace hb {
namespace {

struct Rule {
    std::vector<Real> nodes;    // on (-1, 1)
    std::vector<Real> weights;
};

// Legendre P_n and P_n' at x by recurrence.
std::pair<Real, Real> legendre(int n, const Real& x) {
    long prec = x.precision();
    Real p0(1.0, prec), p1 = x;
    for (int k = 2; k <= n; ++k) {
        Real pk = (Real(2 * k - 1L, prec) * x * p1 - Real(k - 1L, prec) * p0) / Real(static_cast<long>(k), prec);
        p0 = p1;
        p1 = pk;
    }
    Real one(1.0, prec);
    Real dp = Real(static_cast<long>(n), prec) * (x * p1 - p0) / (x * x - one);
    return {p1, dp};
}

Rule make_rule(int n, long prec) {
    Rule r;
    Real one(1.0, prec), two(2.0, prec);
    for (int k = 1; k <= n; ++k) {
        double guess = std::cos(M_PI * (k - 0.25) / (n + 0.5));
        Real x(guess, prec);
        for (int it = 0; it < 64; ++it) {
            auto [p, dp] = legendre(n, x);
            Real dx = p / dp;
            x -= dx;
            if (abs(dx) < pow(Real(2.0, prec), Real(static_cast<long>(-prec + 4), prec))) break;
        }
        auto [p, dp] = legendre(n, x);
        (void)p;
        r.nodes.push_back(x);
        r.weights.push_back(two / ((one - x * x) * dp * dp));
    }
    return r;
}

const Rule& cached_rule(int n, long prec) {
    static std::mutex mu;
    static std::map<std::pair<int, long>, Rule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, prec);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_rule(n, prec)).first;
    return it->second;
}

struct Panel {
    Real a, b, value, error;
};

struct PanelWorse {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

using Fn = std::function<Real(const Real&)>;

Panel eval_panel(const Fn& f, const Real& a, const Real& b, long prec, long& evals) {
    const Rule& g7 = cached_rule(7, prec);
    const Rule& g15 = cached_rule(15, prec);
    Real half = (b - a) / Real(2.0, prec);
    Real mid = (a + b) / Real(2.0, prec);
    Real s7(0.0, prec), s15(0.0, prec);
    for (int i = 0; i < 7; ++i) s7 += g7.weights[i] * f(mid + half * g7.nodes[i]);
    for (int i = 0; i < 15; ++i) s15 += g15.weights[i] * f(mid + half * g15.nodes[i]);
    evals += 22;
    s7 *= half;
    s15 *= half;
    return Panel{a, b, s15, abs(s15 - s7)};
}

QuadratureResult adaptive(const Fn& f, const Real& a, const Real& b, const Real& abs_tol,
                          const QuadOptions& opts, long prec) {
    long evals = 0;
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
    // Seed with a handful of panels so narrow features are not missed.
    const int seed = 8;
    Real prev = a;
    for (int i = 1; i <= seed; ++i) {
        Real next = a + (b - a) * Real(static_cast<long>(i), prec) / Real(static_cast<long>(seed), prec);
        heap.push(eval_panel(f, prev, next, prec, evals));
        prev = next;
    }
    int panels = seed;
    Real two(2.0, prec);
    Real tot_err(0.0, prec);
    {
        std::priority_queue<Panel, std::vector<Panel>, PanelWorse> copy = heap;
        while (!copy.empty()) {
            tot_err += copy.top().error;
            copy.pop();
        }
    }
    while (tot_err > abs_tol && panels < opts.max_panels) {
        Panel worst = heap.top();
        heap.pop();
        tot_err -= worst.error;
        Real mid = (worst.a + worst.b) / two;
        Panel left = eval_panel(f, worst.a, mid, prec, evals);
        Panel right = eval_panel(f, mid, worst.b, prec, evals);
        heap.push(left);
        heap.push(right);
        tot_err += left.error + right.error;
        ++panels;
    }
    Real value(0.0, prec), err(0.0, prec);
    while (!heap.empty()) {
        value += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    if (err > abs_tol && panels >= opts.max_panels)
        throw QuadratureError("quad: did not reach tolerance after " + std::to_string(panels) +
                              " panels (error estimate " + err.str_sig(6) + ")");
    return QuadratureResult{value, err, evals};
}

}  // namespace

QuadratureResult quad(const Fn& f, const Real& a, const Real& b, const Real& abs_tol,
                      const QuadOptions& opts) {
    if (!(abs_tol > Real(0.0, abs_tol.precision()))) throw std::domain_error("quad: abs_tol must be > 0");
    long prec = std::max({Real::default_precision(), a.precision(), b.precision(), abs_tol.precision()});
    Real zero(0.0, prec), one(1.0, prec);

    const bool a_inf = a.is_inf() && a.sign() < 0;
    const bool b_inf = b.is_inf() && b.sign() > 0;
    if (a.is_nan() || b.is_nan() || (a.is_inf() && a.sign() > 0) || (b.is_inf() && b.sign() < 0))
        throw std::domain_error("quad: bad interval");

    if (a_inf && b_inf) {
        QuadratureResult lo = quad(f, a, zero, abs_tol / Real(2.0, prec), opts);
        QuadratureResult hi = quad(f, zero, b, abs_tol / Real(2.0, prec), opts);
        return {lo.value + hi.value, lo.error_estimate + hi.error_estimate,
                lo.evaluations + hi.evaluations};
    }
    if (b_inf) {
        // t = a + u/(1-u), dt = du/(1-u)^2, u over (0,1)
        Real base = a;
        Fn g = [&f, base, prec](const Real& u) {
            Real om = Real(1.0, prec) - u;
            Real t = base + u / om;
            return f(t) / (om * om);
        };
        return adaptive(g, zero, one, abs_tol, opts, prec);
    }
    if (a_inf) {
        Real base = b;
        Fn g = [&f, base, prec](const Real& u) {
            Real om = Real(1.0, prec) - u;
            Real t = base - u / om;
            return f(t) / (om * om);
        };
        return adaptive(g, zero, one, abs_tol, opts, prec);
    }
    return adaptive(f, a, b, abs_tol, opts, prec);
}

}  // namespace hb
