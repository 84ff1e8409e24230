#pragma once

// Spectral phase geometry for the transition zone y/t near -1/8: eigenvalue
// branches, the scalar phase theta_12 and its rotations, z-plane saddle
// points, the collision points z_a..z_d and the cubic-rescaling constants.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "novikov/errors.hpp"
#include "novikov/mat3.hpp"

namespace novikov {

inline constexpr double pi = std::numbers::pi;

inline cplx omega_root() { return cplx{-0.5, std::sqrt(3.0) / 2.0}; } // e^{2 pi i/3}
inline cplx omega_pow(int l) {
    l = ((l % 3) + 3) % 3;
    if (l == 0) return 1.0;
    if (l == 1) return omega_root();
    return std::conj(omega_root());
}
// The reconstruction point e^{i pi/6}, fixed under z -> 1/conj(z).
inline cplx recon_point() { return std::polar(1.0, pi / 6.0); }

// k^2(z) = (z^3 + z^{-3}) / (3 sqrt 3)
inline cplx k_squared(cplx z) {
    if (std::abs(z) < 1e-150) throw regime_error("k_squared: z = 0");
    cplx z3 = z * z * z;
    return (z3 + 1.0 / z3) / (3.0 * std::sqrt(3.0));
}

// lambda_j(z) = (omega^j z + 1/(omega^j z)) / sqrt 3, j = 1..3
inline cplx lambda_branch(int j, cplx z) {
    if (j < 1 || j > 3) throw config_error("lambda_branch: j must be 1..3");
    if (std::abs(z) < 1e-150) throw regime_error("lambda_branch: z = 0");
    cplx w = omega_pow(j) * z;
    return (w + 1.0 / w) / std::sqrt(3.0);
}

namespace detail {
// bracket z^2 - 1 + z^{-2} = ktilde^2 + 1 with ktilde = z - 1/z
inline cplx phase_bracket(cplx z) {
    cplx k = z - 1.0 / z;
    return k * k + 1.0;
}
} // namespace detail

// Guard radius around the zeros of the bracket (the inner ring of spectral
// singularities); evaluation inside raises singular_point_error.
inline constexpr double phase_bracket_guard = 1e-8;

// theta_12(z; xi) = sqrt(3) (z - 1/z) [ xi - 1/(z^2 - 1 + z^{-2}) ]
inline cplx theta12(cplx z, double xi) {
    if (std::abs(z) < 1e-150) throw regime_error("theta12: z = 0");
    cplx br = detail::phase_bracket(z);
    if (std::abs(br) < phase_bracket_guard)
        throw singular_point_error("theta12: z too close to a bracket singularity");
    return std::sqrt(3.0) * (z - 1.0 / z) * (xi - 1.0 / br);
}

inline cplx theta23(cplx z, double xi) { return theta12(omega_root() * z, xi); }
inline cplx theta31(cplx z, double xi) { return theta12(omega_root() * omega_root() * z, xi); }

// d theta_12 / dz in closed form; used for saddle residuals.
inline cplx theta12_dz(cplx z, double xi) {
    if (std::abs(z) < 1e-150) throw regime_error("theta12_dz: z = 0");
    cplx k = z - 1.0 / z;
    cplx br = k * k + 1.0;
    if (std::abs(br) < phase_bracket_guard)
        throw singular_point_error("theta12_dz: bracket singularity");
    cplx g = (1.0 - k * k) / (br * br);
    return std::sqrt(3.0) * (xi - g) * (1.0 + 1.0 / (z * z));
}

// Transition-zone parameters at (xi, t).
struct Regime {
    double xi = -0.125;
    double t = 1.0;
    double stilde = 0.0;
    double window_constant = 10.0; // C in |xi + 1/8| t^{2/3} <= C

    bool in_window() const { return std::abs(xi + 0.125) * std::pow(t, 2.0 / 3.0) <= window_constant; }
};

// z-plane saddle data at a given xi in (-1/8, 0), plus the xi-independent
// collision points and cubic scaling constants.
struct SaddleSet {
    double kappa0 = 0.0, kappa1 = 0.0; // ktilde-plane saddles, kappa0 < kappa1
    double p0 = 0.0, p1 = 0.0;         // z-plane saddles in (0,1), p1 < p0
    double za = 0.0, zb = 0.0, zc = 0.0, zd = 0.0;
    double ca = 0.0, cb = 0.0, cc = 0.0, cd = 0.0;
};

inline double collision_za() { return (std::sqrt(7.0) + std::sqrt(3.0)) / 2.0; }
inline double collision_zb() { return (std::sqrt(7.0) - std::sqrt(3.0)) / 2.0; }

// Cubic scaling constants c_a = (21/256)(14 sqrt3 - 9 sqrt7) and
// c_b = (21/256)(14 sqrt3 + 9 sqrt7); c_c = c_b, c_d = c_a.
inline double scaling_ca() { return 21.0 / 256.0 * (14.0 * std::sqrt(3.0) - 9.0 * std::sqrt(7.0)); }
inline double scaling_cb() { return 21.0 / 256.0 * (14.0 * std::sqrt(3.0) + 9.0 * std::sqrt(7.0)); }

// Linear coefficient of the cubic rescaling: with zhat = (c_j t)^{1/3}(z - z_j),
//   -t theta_12(z) = -t theta_12(z_j) + (8/3) zhat^3 + 2 stilde zhat + O(t^{-1/3} zhat^2),
//   stilde = s1 (1 + 8 xi) t^{2/3}.
// Consistency of the linear term with c_a fixes s1 = -2^{-4/3}; the same value
// comes out at all four collision points. (The series expansion:
// -t theta'(z_j) (z - z_j) = -sqrt3 (1 + z_j^{-2}) (1+8xi)/8 * t^{2/3} c_j^{-1/3} zhat,
// and sqrt3 (1 + z_j^{-2}) / (16 c_j^{1/3}) = 2^{-4/3} exactly.)
inline double scaling_s1() { return -std::pow(2.0, -4.0 / 3.0); }

struct ScalingConstants {
    double ca, cb, s1;
};
inline ScalingConstants scaling_constants() { return {scaling_ca(), scaling_cb(), scaling_s1()}; }

inline double stilde_of(double xi, double t) {
    return scaling_s1() * (1.0 + 8.0 * xi) * std::pow(t, 2.0 / 3.0);
}

inline SaddleSet solve_saddles(double xi) {
    if (!(xi > -0.125) || !(xi < 0.0))
        throw regime_error("solve_saddles: xi must lie in (-1/8, 0)");
    double disc = std::sqrt(1.0 + 8.0 * xi);
    // varpi roots of xi varpi^2 + varpi - 2 = 0; kappa^2 = varpi - 1
    double k0sq = (disc - 1.0 - 2.0 * xi) / (2.0 * xi);
    double k1sq = -(disc + 1.0 + 2.0 * xi) / (2.0 * xi);
    SaddleSet s;
    s.kappa0 = std::sqrt(k0sq);
    s.kappa1 = std::sqrt(k1sq);
    s.p0 = (std::sqrt(k0sq + 4.0) - s.kappa0) / 2.0;
    s.p1 = (std::sqrt(k1sq + 4.0) - s.kappa1) / 2.0;
    s.za = collision_za();
    s.zb = collision_zb();
    s.zc = -s.zb;
    s.zd = -s.za;
    s.ca = scaling_ca();
    s.cb = scaling_cb();
    s.cc = s.cb;
    s.cd = s.ca;
    return s;
}

// ---------------------------------------------------------------------------
// Lens sectors attached to the saddles (upper half plane) and their
// conjugates; only the sign of Im theta_12 on them is ever asserted.

enum class Sector {
    Omega1, Omega2, Omega3, Omega4, Omega5, Omega6, Omega7, Omega8,
    Omega1c, Omega2c, Omega3c, Omega4c, Omega5c, Omega6c, Omega7c, Omega8c
};

inline bool sector_is_conjugate(Sector s) { return static_cast<int>(s) >= 8; }
inline int sector_index(Sector s) { return static_cast<int>(s) % 8 + 1; }

// Vertex (saddle point) the sector is attached to.
inline double sector_vertex(Sector s, const SaddleSet& sad) {
    switch (sector_index(s)) {
        case 1: return 1.0 / sad.p1;
        case 2: return 1.0 / sad.p0;
        case 3: return sad.p0;
        case 4: return sad.p1;
        case 5: return -sad.p1;
        case 6: return -sad.p0;
        case 7: return -1.0 / sad.p0;
        default: return -1.0 / sad.p1;
    }
}

// Membership test; phi0 < pi/8 is the lens half-angle. Sectors 1..4 sit on
// the positive axis, 5..8 are their mirrors through the imaginary axis; the
// conjugate sectors are reflections into the lower half plane.
inline bool sector_contains(Sector s, const SaddleSet& sad, double phi0, cplx z) {
    if (!(phi0 > 0.0) || !(phi0 < pi / 8.0))
        throw config_error("sector_contains: need 0 < phi0 < pi/8");
    if (sector_is_conjugate(s)) z = std::conj(z);
    int j = sector_index(s);
    if (j >= 5) {
        z = -std::conj(z); // mirror through the imaginary axis: Omega_{9-j}
        j = 9 - j;
    }
    double cap = (1.0 - sad.p0 * sad.p0) / (2.0 * sad.p0);
    double v, lo, hi;
    bool right; // opening to the right (arg in [0, phi0]) or left ([pi-phi0, pi])
    switch (j) {
        case 1: v = 1.0 / sad.p1; right = true; lo = 0.0; hi = 1e308; break;
        case 2: v = 1.0 / sad.p0; right = false; lo = 0.0; hi = cap; break;
        case 3: v = sad.p0; right = true; lo = 0.0; hi = cap; break;
        default: v = sad.p1; right = false; lo = 0.0; hi = sad.p1 / 2.0; break;
    }
    cplx w = z - v;
    double arg = std::arg(w);
    double re = std::abs(w.real());
    if (re < lo || re > hi) return false;
    if (right) return arg >= 0.0 && arg <= phi0;
    return arg >= pi - phi0 && arg <= pi;
}

struct SectorSignReport {
    int checked = 0;
    int violations = 0;
    std::vector<cplx> rejected;    // samples outside the sector
    std::vector<cplx> failing;     // samples with the wrong sign of Im theta12
    double worst_margin = 1e308;   // min |Im theta12| over accepted samples
    bool pass() const { return violations == 0; }
};

// Sign-level restatement of the phase estimates: Im theta12 < 0 on Omega_j,
// > 0 on the conjugate sectors, = 0 on the real axis.
inline SectorSignReport sector_sign_check(double xi, Sector s, double phi0,
                                          const std::vector<cplx>& samples) {
    SaddleSet sad = solve_saddles(xi);
    SectorSignReport rep;
    const double want = sector_is_conjugate(s) ? +1.0 : -1.0;
    for (cplx z : samples) {
        if (!sector_contains(s, sad, phi0, z)) {
            rep.rejected.push_back(z);
            continue;
        }
        ++rep.checked;
        double im = theta12(z, xi).imag();
        if (im * want <= 0.0) {
            ++rep.violations;
            rep.failing.push_back(z);
        }
        rep.worst_margin = std::min(rep.worst_margin, std::abs(im));
    }
    return rep;
}

} // namespace novikov
