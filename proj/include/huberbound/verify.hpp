#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "huberbound/spectrum.hpp"

namespace hb {

// One row of the prime-geodesic verification table (11 columns).
struct PgtRow {
    Real norm;             // 1: x
    long multiplicity;     // 2
    Int d;                 // 3
    Real li;               // 4: sum_k li0(x^{s_k})
    long pi_running;       // 5: cumulative class count in row order
    Real li_over_pi;       // 6
    Real abs_err;          // 7: |li - pi|
    Real x34_over_sqrtlog; // 8: x^{3/4}/sqrt(log x)
    Real ratio_col9;       // 9: (7)/(8)
    Real sqrt_x;           // 10
    Real ratio_col11;      // 11: (7)/(10)
};

// Row ordering override for exactly-tied norms: trace -> discriminant
// sequence. Ties not listed here stay in ascending-discriminant order.
using TieOrder = std::vector<std::pair<long, std::vector<long>>>;

// Ordering used by the reference tabulation for the modular group (its tied
// rows are not in discriminant order).
const TieOrder& modular_reference_tie_order();

struct PgtOptions {
    const TieOrder* tie_order = nullptr;
    long prec = 0;
};

std::vector<PgtRow> pgt_table(const LengthSpectrum& s, const std::vector<Real>& small_s,
                              const PgtOptions& opts = {});

void export_pgt_csv(const std::vector<PgtRow>& rows, std::ostream& out, int decimals = 6);

enum class LiConvention { kLi0, kLi2 };

struct EmpiricalHuberOptions {
    LiConvention convention = LiConvention::kLi0;
    int grid_per_gap = 16;
    long prec = 0;
};

// Empirical Huber statistics over a complete spectrum. `sup_value` maximises
// |pi(x) - sum li(x^{s_k})| log x / x^{3/4} over both one-sided limits at
// every jump plus a log grid between jumps; `jump_value` restricts to the
// post-jump points, which is the statistic behind the "< 2" observation for
// the modular group.
struct EmpiricalHuber {
    Real sup_value;
    Real sup_at;
    std::string sup_side;  // "pre", "post" or "grid"
    Real jump_value;
    Real jump_at;
    long evaluation_points = 0;
};

EmpiricalHuber empirical_huber(const LengthSpectrum& s, const std::vector<Real>& small_s,
                               const EmpiricalHuberOptions& opts = {});

// Core of the statistic on a raw jump list (norm, multiplicity), norms
// strictly increasing.
EmpiricalHuber empirical_huber_from_jumps(const std::vector<std::pair<Real, long>>& jumps,
                                          const std::vector<Real>& small_s,
                                          const EmpiricalHuberOptions& opts = {});

// Geodesic Chebyshev functions. kTheta/kPsi/kH take the length cutoff T
// (classes with norm <= e^T); kBigThetaNorm takes the norm cutoff x directly.
enum class ChebyshevKind { kTheta, kPsi, kBigThetaNorm, kH };

Real chebyshev(const LengthSpectrum& s, const Real& T, ChebyshevKind kind, long prec = 0);

struct LemmaReport {
    std::string id;
    std::string claim;
    std::string grid;
    Real worst_margin;      // min over the grid of (bound - quantity)
    bool pass = false;
    bool report_only = false;
    std::string detail;
};

// Non-negative step function given by its jumps, alpha(0) = 0.
struct StepFunction {
    std::vector<std::pair<Real, Real>> jumps;  // (t_i, jump_i), sorted by t_i
};

// Tauberian check: verifies f(s) = sum jump_i e^{-s t_i} <= C/s on a log
// grid over (0, d], then alpha(t) <= 3 C t at every jump >= 1/d and at 1/d.
LemmaReport karamata_check(const StepFunction& alpha, const Real& C, const Real& d_param,
                           int s_grid_points = 512);

struct BumpConstants {
    Real c0;           // integral of exp(1/(x^2-1)) over [-1,1]
    Real phi_pp_max;   // max |phi''| on [-1,1] for the normalised bump
    LemmaReport c1_margin;
    LemmaReport c2_margin;
};

BumpConstants bump_constants(long prec = 0);

struct LemmaSuiteOptions {
    int t_points = 512;    // log grid on (1e-4, 5]
    int r_points = 1024;
    int x_points = 17;     // per s value in the li-offset check
    int s_points = 9;
    Real c{6.85};          // hyperbolic norm floor used by the li-offset check
    long prec = 0;
};

std::vector<LemmaReport> lemma_suite(const LemmaSuiteOptions& opts = {});

std::string lemma_report_text(const std::vector<LemmaReport>& reports);

}  // namespace hb
