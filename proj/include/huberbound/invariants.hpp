#pragma once

#include <optional>
#include <string>
#include <vector>

#include "huberbound/real.hpp"

namespace hb {

// One elliptic conjugacy class: tr(R) = 2 cos(theta_R), m_R = |C(R)|.
struct EllipticClassData {
    int m_R = 2;
    Real theta_R;
};

// Geometric/spectral inputs describing a cofinite Fuchsian group, as fed to
// the constant tables. Derivation of these from a group presentation is out
// of scope; they are user inputs.
struct FundamentalInvariants {
    int tau = 0;                       // cusp count
    Real area;                         // |F|
    Real Y{0.0};                       // cusp-sector height
    std::vector<Real> diameters;       // d_j of the compact pieces K_j (<= min(2,tau))
    std::optional<Real> diameter_cocompact;
    std::vector<EllipticClassData> elliptic;
    int A = 1;                         // eigenvalues <= 1/4 including lambda_0
    Real s1 = Real::pos_infinity();    // +inf when lambda_1 > 1/4
    std::vector<Real> small_s;         // s_k values, s_0 = 1
    int N_sc = 0;                      // exceptional scattering poles
    Real sigma_N{1.0};
    Real c1{1.0};
    Real c{2.0};                       // 1 < c < smallest norm
    std::optional<Real> B_override;
};

// The modular group inputs: tau = 1, |F| = pi/3, Y = 2, elliptic classes
// (2, pi/2) and (3, pi/3), A = 1, c1 = 1, one scattering pole at s = 1,
// c = 6.85, B pinned to 753.
FundamentalInvariants psl2z_preset(long prec = Real::default_precision());

// Flat "key = value" config; lists comma-separated. Unknown keys rejected.
FundamentalInvariants parse_invariants(const std::string& text,
                                       long prec = Real::default_precision());
FundamentalInvariants load_invariants(const std::string& path,
                                      long prec = Real::default_precision());

}  // namespace hb
