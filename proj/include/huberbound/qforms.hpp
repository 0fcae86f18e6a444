#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

#include "huberbound/real.hpp"

namespace hb {

using Int = boost::multiprecision::cpp_int;

Real real_from_int(const Int& n, long prec = Real::default_precision());

// True iff D > 0, D = 0 or 1 (mod 4), and D is not a perfect square.
bool is_discriminant(const Int& D);

// Primitive indefinite binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
    Int a, b, c;

    Int discriminant() const { return b * b - 4 * a * c; }
    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const QuadForm& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

bool is_primitive(const QuadForm& f);

// Gauss-reduced for indefinite forms: |sqrt(d) - 2|a|| < b < sqrt(d).
bool is_reduced(const QuadForm& f);

// One reduction step (a,b,c) -> (c,b',c'), b' = -b (mod 2c) placed in the
// reduced window. Preserves the discriminant and the proper equivalence
// class; iteration reaches a reduced form and then cycles.
QuadForm rho(const QuadForm& f);

// Fundamental solution of t^2 - d u^2 = 4 (minimal u among positive
// solutions).
struct PellSolution {
    Int d, t, u;

    Real eps(long prec = Real::default_precision()) const;    // (t + u sqrt d)/2
    Real norm(long prec = Real::default_precision()) const;   // eps^2
};

struct FundamentalUnit {
    PellSolution pell;
    int unit_norm = +1;  // norm of the smallest unit of the order (before squaring)
};

// Continued-fraction expansion of (d mod 2 + sqrt d)/2; aborts with nullopt
// once the running unit provably exceeds eps_bound.
std::optional<PellSolution> pell4(const Int& d, const Real* eps_bound = nullptr);

FundamentalUnit fundamental_unit(const Int& d);

struct ClassGroup {
    long h_plus = 0;
    std::vector<QuadForm> representatives;  // lexicographically least per cycle
};

// Reduced-form enumeration partitioned into rho-cycles; h+ = cycle count.
ClassGroup narrow_class_number(const Int& d);

struct Matrix2 {
    Int m11, m12, m21, m22;

    Int trace() const { return m11 + m22; }
    Int det() const { return m11 * m22 - m12 * m21; }
    Matrix2 operator*(const Matrix2& o) const {
        return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
                m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
    }
    bool operator==(const Matrix2& o) const {
        return m11 == o.m11 && m12 == o.m12 && m21 == o.m21 && m22 == o.m22;
    }
};

// ((t-bu)/2, -cu; au, (t+bu)/2); determinant 1, trace t.
Matrix2 form_to_matrix(const QuadForm& f, const PellSolution& p);

// N(m) = ((|tr| + sqrt(tr^2-4))/2)^2 for hyperbolic m (|tr| > 2).
Real matrix_norm(const Matrix2& m, long prec = Real::default_precision());

}  // namespace hb
