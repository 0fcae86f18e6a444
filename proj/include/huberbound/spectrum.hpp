#pragma once

#include <iosfwd>
#include <vector>

#include "huberbound/qforms.hpp"

namespace hb {

// One primitive hyperbolic conjugacy class (or a bundle of classes sharing
// norm and discriminant, for subgroup spectra). The norm is kept exact as
// trace data: norm = ((T + sqrt(T^2-4))/2)^2 with T = trace(rep^exponent).
struct GeodesicClass {
    Int d;               // discriminant of the underlying form class
    Int t, u;            // fundamental Pell solution for d
    QuadForm form;       // cycle representative (lexicographically least)
    Matrix2 rep;         // phi(form) in the base group
    int exponent = 1;    // power taken when descending to a subgroup
    Int trace_pow;       // trace(rep^exponent); exact sort key
    long multiplicity = 1;

    Real norm(long prec = Real::default_precision()) const;
    Real length(long prec = Real::default_precision()) const { return log(norm(prec)); }
};

struct LengthSpectrum {
    std::vector<GeodesicClass> entries;  // sorted by (trace_pow, d, exponent)
    Real x_max{0.0};

    long class_count() const;
};

// (norm, multiplicity, discriminant) view, one row per (trace_pow, d).
struct SpectrumAggregate {
    Int trace_pow;
    Int d;
    long multiplicity = 0;
    Real norm;
};

std::vector<SpectrumAggregate> aggregate(const LengthSpectrum& s,
                                         long prec = Real::default_precision());

// Step 1: sweep discriminants d < 4 x_max, keep classes with eps_d^2 <= x_max.
LengthSpectrum modular_spectrum(const Real& x_max, int threads = 1);

struct QuotientGroup {
    long level = 0;
    long order = 0;  // |PSL(2, Z/N)|
};

QuotientGroup quotient_group(long N);

// Least k >= 1 with m^k = +/- I (mod N).
long element_order(const Matrix2& m, long N);

// Steps 2-3: split each base class in the principal congruence subgroup of
// the given level; a class of order m lifts to |G|/m classes of norm^m.
LengthSpectrum split_spectrum(const LengthSpectrum& base, long N, const Real& x_max);

struct CsvOptions {
    int decimals = 6;
    bool header = false;
};

// norm,multiplicity,discriminant,li0(norm) per aggregate row.
void export_csv(const LengthSpectrum& s, std::ostream& out, const CsvOptions& opts = {});

}  // namespace hb
