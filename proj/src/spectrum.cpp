#include "huberbound/spectrum.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "huberbound/special.hpp"

namespace hb {

namespace mp = boost::multiprecision;

Real GeodesicClass::norm(long prec) const {
    long wp = prec + 8;
    Real T = real_from_int(trace_pow, wp);
    Real lam = (T + sqrt(T * T - Real(4.0, wp))) / Real(2.0, wp);
    Real out(prec);
    mpfr_sqr(out.raw(), lam.raw(), MPFR_RNDN);
    return out;
}

long LengthSpectrum::class_count() const {
    long n = 0;
    for (const auto& e : entries) n += e.multiplicity;
    return n;
}

std::vector<SpectrumAggregate> aggregate(const LengthSpectrum& s, long prec) {
    std::vector<SpectrumAggregate> out;
    for (const auto& e : s.entries) {
        if (!out.empty() && out.back().trace_pow == e.trace_pow && out.back().d == e.d) {
            out.back().multiplicity += e.multiplicity;
        } else {
            out.push_back({e.trace_pow, e.d, e.multiplicity, Real(prec)});
        }
    }
    for (auto& a : out) {
        Real T = real_from_int(a.trace_pow, prec + 8);
        Real lam = (T + sqrt(T * T - Real(4.0, prec + 8))) / Real(2.0, prec + 8);
        mpfr_sqr(a.norm.raw(), lam.raw(), MPFR_RNDN);
    }
    return out;
}

namespace {

void sort_entries(std::vector<GeodesicClass>& v) {
    std::sort(v.begin(), v.end(), [](const GeodesicClass& a, const GeodesicClass& b) {
        if (a.trace_pow != b.trace_pow) return a.trace_pow < b.trace_pow;
        if (a.d != b.d) return a.d < b.d;
        if (a.exponent != b.exponent) return a.exponent < b.exponent;
        return a.form < b.form;
    });
}

void sweep_range(long lo, long hi, const Real& x_max, const Real& eps_bound,
                 std::vector<GeodesicClass>& out) {
    for (long dd = lo; dd < hi; ++dd) {
        Int d(dd);
        if (!is_discriminant(d)) continue;
        auto sol = pell4(d, &eps_bound);
        if (!sol) continue;
        if (sol->norm(x_max.precision() + 16) > x_max) continue;
        ClassGroup cg = narrow_class_number(d);
        for (const auto& f : cg.representatives) {
            GeodesicClass g;
            g.d = d;
            g.t = sol->t;
            g.u = sol->u;
            g.form = f;
            g.rep = form_to_matrix(f, *sol);
            g.exponent = 1;
            g.trace_pow = sol->t;
            g.multiplicity = 1;
            out.push_back(std::move(g));
        }
    }
}

}  // namespace

LengthSpectrum modular_spectrum(const Real& x_max, int threads) {
    long prec = std::max<long>(128, x_max.precision());
    if (!(x_max > Real(1.0, prec))) throw std::domain_error("modular_spectrum: x_max must be > 1");
    LengthSpectrum s;
    s.x_max = x_max;
    // slack bound: never rejects eps <= sqrt(x_max); exact norm check follows
    Real eps_bound = sqrt(x_max) + Real(1.0, prec);

    long dmax = static_cast<long>(4.0 * x_max.to_double()) + 1;
    if (threads <= 1) {
        sweep_range(5, dmax, x_max, eps_bound, s.entries);
    } else {
        std::vector<std::vector<GeodesicClass>> parts(threads);
        std::vector<std::thread> pool;
        long chunk = (dmax - 5 + threads - 1) / threads;
        for (int i = 0; i < threads; ++i) {
            long lo = 5 + i * chunk;
            long hi = std::min(dmax, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi, i] { sweep_range(lo, hi, x_max, eps_bound, parts[i]); });
        }
        for (auto& t : pool) t.join();
        for (auto& p : parts)
            for (auto& e : p) s.entries.push_back(std::move(e));
    }
    sort_entries(s.entries);
    return s;
}

QuotientGroup quotient_group(long N) {
    if (N < 2) throw std::domain_error("quotient_group: level must be >= 2");
    if (N == 2) return {2, 6};
    // |PSL(2,Z/N)| = N^3/2 * prod_{p|N} (1 - 1/p^2)
    Int num = Int(N) * N * N, den = 2;
    long n = N;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        num *= p * p - 1;
        den *= p * p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) {
        num *= n * n - 1;
        den *= n * n;
    }
    Int o = num / den;
    return {N, o.convert_to<long>()};
}

namespace {

struct M64 {
    long a, b, c, d;
};

M64 mul_mod(const M64& x, const M64& y, long N) {
    return {(x.a * y.a + x.b * y.c) % N, (x.a * y.b + x.b * y.d) % N,
            (x.c * y.a + x.d * y.c) % N, (x.c * y.b + x.d * y.d) % N};
}

}  // namespace

long element_order(const Matrix2& m, long N) {
    if (m.det() != 1) throw std::domain_error("element_order: determinant must be 1");
    auto red = [N](const Int& v) {
        Int r = v % N;
        if (r < 0) r += N;
        return r.convert_to<long>();
    };
    M64 base{red(m.m11), red(m.m12), red(m.m21), red(m.m22)};
    M64 acc = base;
    const M64 id{1 % N, 0, 0, 1 % N};
    const M64 nid{(N - 1) % N, 0, 0, (N - 1) % N};
    auto is = [](const M64& x, const M64& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    };
    long limit = 8 * quotient_group(std::max(N, 2L)).order + 8;
    for (long k = 1; k <= limit; ++k) {
        if (is(acc, id) || is(acc, nid)) return k;
        acc = mul_mod(acc, base, N);
    }
    throw std::logic_error("element_order: order not found (internal bug)");
}

LengthSpectrum split_spectrum(const LengthSpectrum& base, long N, const Real& x_max) {
    if (x_max > base.x_max)
        throw std::domain_error("split_spectrum: base spectrum incomplete for requested x_max");
    QuotientGroup G = quotient_group(N);
    LengthSpectrum out;
    out.x_max = x_max;
    long prec = std::max<long>(128, x_max.precision());
    for (const auto& e : base.entries) {
        if (e.exponent != 1 || e.multiplicity != 1)
            throw std::domain_error("split_spectrum: base must be a per-class modular spectrum");
        long m = element_order(e.rep, N);
        if (G.order % m != 0) throw std::logic_error("split_spectrum: order does not divide |G|");
        // trace of rep^m via t_k = t * t_{k-1} - t_{k-2}, t_0 = 2
        Int t1 = e.rep.trace();
        Int prev = 2, tm = t1;
        for (long k = 2; k <= m; ++k) {
            Int next = t1 * tm - prev;
            prev = tm;
            tm = next;
        }
        GeodesicClass g = e;
        g.exponent = m;
        g.trace_pow = tm;
        g.multiplicity = G.order / m;
        if (g.norm(prec + 16) > x_max) continue;
        out.entries.push_back(std::move(g));
    }
    sort_entries(out.entries);
    return out;
}

void export_csv(const LengthSpectrum& s, std::ostream& out, const CsvOptions& opts) {
    if (opts.header) out << "norm,multiplicity,discriminant,li\n";
    for (const auto& a : aggregate(s)) {
        out << a.norm.str_fixed(opts.decimals) << ',' << a.multiplicity << ',' << a.d.str() << ','
            << li0(a.norm).str_fixed(opts.decimals) << '\n';
    }
}

}  // namespace hb
