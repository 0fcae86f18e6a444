#include "huberbound/qforms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hb {

namespace mp = boost::multiprecision;

Real real_from_int(const Int& n, long prec) {
    return Real::from_string(n.str(), prec);
}

bool is_discriminant(const Int& D) {
    if (D <= 0) return false;
    Int m = D % 4;
    if (m != 0 && m != 1) return false;
    Int r = mp::sqrt(D);
    return r * r != D;
}

bool is_primitive(const QuadForm& f) {
    return mp::gcd(mp::gcd(abs(f.a), abs(f.b)), abs(f.c)) == 1;
}

bool is_reduced(const QuadForm& f) {
    Int d = f.discriminant();
    if (!is_discriminant(d) || f.b <= 0) return false;
    Int r = mp::sqrt(d);
    if (f.b > r) return false;                       // b < sqrt(d)
    Int twoA = 2 * abs(f.a);
    Int hi = twoA + f.b;
    if (hi * hi <= d) return false;                  // sqrt(d) < 2|a| + b
    if (twoA > f.b) {
        Int lo = twoA - f.b;
        if (lo * lo >= d) return false;              // 2|a| - b < sqrt(d)
    }
    return true;
}

namespace {

// floor division for cpp_int
Int fdiv(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

Int fmod(const Int& a, const Int& b) { return a - fdiv(a, b) * b; }

}  // namespace

QuadForm rho(const QuadForm& f) {
    Int d = f.discriminant();
    if (!is_discriminant(d)) throw std::domain_error("rho: invalid discriminant");
    if (f.c == 0) throw std::domain_error("rho: degenerate form (c = 0)");
    Int r = mp::sqrt(d);
    Int ac = abs(f.c);
    Int m = 2 * ac;
    Int bp;
    if (ac > r) {
        bp = fmod(-f.b, m);               // -|c| < b' <= |c|
        if (bp > ac) bp -= m;
    } else {
        Int lo = r + 1 - m;               // sqrt(d) - 2|c| < b' < sqrt(d)
        bp = lo + fmod(-f.b - lo, m);
    }
    Int cp = (bp * bp - d) / (4 * f.c);
    return {f.c, bp, cp};
}

Real PellSolution::eps(long prec) const {
    Real sd = sqrt(real_from_int(d, prec + 8));
    return (real_from_int(t, prec + 8) + real_from_int(u, prec + 8) * sd) / Real(2.0, prec);
}

Real PellSolution::norm(long prec) const {
    Real e = eps(prec + 8);
    Real out(prec);
    mpfr_sqr(out.raw(), e.raw(), MPFR_RNDN);
    return out;
}

namespace {

// exact (X + Y sqrt d)/Z accumulator for the unit product
struct QuadNum {
    Int x, y, z;

    void normalize() {
        Int g = mp::gcd(mp::gcd(abs(x), abs(y)), abs(z));
        if (g > 1) { x /= g; y /= g; z /= g; }
        if (z < 0) { x = -x; y = -y; z = -z; }
    }
};

}  // namespace

std::optional<PellSolution> pell4(const Int& d, const Real* eps_bound) {
    if (!is_discriminant(d)) throw std::domain_error("pell4: invalid discriminant");
    long bprec = eps_bound ? std::max<long>(128, eps_bound->precision()) : 128;

    Int r = mp::sqrt(d);
    Int P = d % 2, Q = 2;
    // step once so the state is inside the periodic part before recording
    Int a0 = fdiv(P + r, Q);
    Int P1 = a0 * Q - P, Q1 = (d - P1 * P1) / Q;
    Int Pk = P1, Qk = Q1;
    QuadNum unit{1, 0, 1};
    long period = 0;
    while (true) {
        // multiply by xi_k = (P_k + sqrt d)/Q_k
        Int nx = unit.x * Pk + unit.y * d;
        Int ny = unit.x + unit.y * Pk;
        unit.x = nx;
        unit.y = ny;
        unit.z *= Qk;
        unit.normalize();
        ++period;

        if (eps_bound) {
            // running product only grows (every xi > 1): (x + y*r)/z > bound?
            Real part = (real_from_int(unit.x, bprec) +
                         real_from_int(unit.y, bprec) * sqrt(real_from_int(d, bprec))) /
                        real_from_int(unit.z, bprec);
            if (part > *eps_bound) return std::nullopt;
        }

        Int ak = fdiv(Pk + r, Qk);
        Int Pn = ak * Qk - Pk;
        Int Qn = (d - Pn * Pn) / Qk;
        Pk = Pn;
        Qk = Qn;
        if (Pk == P1 && Qk == Q1) break;
    }
    // unit = fundamental unit of the order, norm (-1)^period
    Int t = 2 * unit.x, u = 2 * unit.y;
    if (t % unit.z != 0 || u % unit.z != 0)
        throw std::logic_error("pell4: non-integral unit (internal bug)");
    t /= unit.z;
    u /= unit.z;
    if (period % 2 != 0) {                     // norm -1: square it
        Int t4 = t * t + 2;
        u = t * u;
        t = t4;
    }
    PellSolution sol{d, t, u};
    if (eps_bound && sol.eps(bprec) > *eps_bound) return std::nullopt;
    return sol;
}

FundamentalUnit fundamental_unit(const Int& d) {
    auto sol = pell4(d);
    // norm -1 unit exists iff eps_d is a square in the order:
    // t-2 = x^2 and (t+2)/d = y^2 with (x + y sqrt d)/2 the smaller unit.
    FundamentalUnit fu{*sol, +1};
    Int tm = sol->t - 2;
    Int rx = mp::sqrt(tm);
    if (rx * rx == tm && (sol->t + 2) % d == 0) {
        Int q = (sol->t + 2) / d;
        Int ry = mp::sqrt(q);
        if (ry * ry == q) fu.unit_norm = -1;
    }
    return fu;
}

ClassGroup narrow_class_number(const Int& d) {
    if (!is_discriminant(d)) throw std::domain_error("narrow_class_number: invalid discriminant");
    Int r = mp::sqrt(d);
    std::set<QuadForm> forms;
    Int bstart = (d % 2 == 0) ? 2 : 1;
    for (Int b = bstart; b <= r; b += 2) {
        Int N = (d - b * b) / 4;
        for (Int a = 1; a * a <= N; ++a) {
            if (N % a != 0) continue;
            const Int divisors[2] = {a, Int(N / a)};
            for (const Int& div : divisors) {
                // reduced window: (2 div - b)^2 < d < (2 div + b)^2
                Int hi = 2 * div + b;
                if (hi * hi <= d) continue;
                if (2 * div > b) {
                    Int lo = 2 * div - b;
                    if (lo * lo >= d) continue;
                }
                Int c = -(N / div);
                QuadForm f{div, b, c};
                if (!is_primitive(f)) continue;
                forms.insert(f);
                forms.insert(QuadForm{-div, b, -c});
                if (a * a == N) break;  // both divisors equal
            }
        }
    }
    ClassGroup out;
    std::set<QuadForm> seen;
    for (const auto& f : forms) {
        if (seen.count(f)) continue;
        ++out.h_plus;
        QuadForm least = f, g = f;
        while (true) {
            seen.insert(g);
            g = rho(g);
            if (g == f) break;
            if (g < least) least = g;
        }
        out.representatives.push_back(least);
    }
    return out;
}

Matrix2 form_to_matrix(const QuadForm& f, const PellSolution& p) {
    if (f.discriminant() != p.d) throw std::domain_error("form_to_matrix: discriminant mismatch");
    Int bu = f.b * p.u;
    if ((p.t - bu) % 2 != 0) throw std::logic_error("form_to_matrix: parity violation");
    return {(p.t - bu) / 2, -f.c * p.u, f.a * p.u, (p.t + bu) / 2};
}

Real matrix_norm(const Matrix2& m, long prec) {
    Int tr = abs(m.trace());
    if (tr <= 2) throw std::domain_error("matrix_norm: non-hyperbolic matrix (|tr| <= 2)");
    long wp = prec + 8;
    Real T = real_from_int(tr, wp);
    Real lam = (T + sqrt(T * T - Real(4.0, wp))) / Real(2.0, wp);
    Real out(prec);
    mpfr_sqr(out.raw(), lam.raw(), MPFR_RNDN);
    return out;
}

}  // namespace hb
