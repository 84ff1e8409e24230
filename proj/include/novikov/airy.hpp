#pragma once

// Airy function Ai and its derivative, real argument. Maclaurin series for
// moderate |x| glued to the standard asymptotic expansions on both sides; no
// external special-function dependency. Accuracy is far better than the 1e-6
// absolute level the Painleve matching tests require (see the unit tests).

#include <cmath>
#include <utility>

#include "novikov/errors.hpp"

namespace novikov {

namespace airy_detail {

inline constexpr double ai0 = 0.35502805388781723926;   // 3^{-2/3} / Gamma(2/3)
inline constexpr double aip0 = -0.25881940379280679841; // -3^{-1/3} / Gamma(1/3)

// Maclaurin: Ai = ai0 * f(x) + aip0 * g(x), f'' = x f type recurrences.
inline std::pair<double, double> series(double x) {
    double f = 1.0, fp = 0.0;   // f and f'
    double g = x, gp = 1.0;     // g and g'
    double tf = 1.0, tg = x;    // running terms
    double x3 = x * x * x;
    for (int k = 1; k < 140; ++k) {
        double k3 = 3.0 * k;
        tf *= x3 / (k3 * (k3 - 1.0));
        tg *= x3 / (k3 * (k3 + 1.0));
        f += tf;
        g += tg;
        fp += tf * k3 / x;
        gp += tg * (k3 + 1.0) / x;
        if (std::abs(tf) < 1e-18 * std::abs(f) && std::abs(tg) < 1e-18 * std::abs(g)) break;
    }
    double ai = ai0 * f + aip0 * g;
    double aip = (x == 0.0) ? aip0 : (ai0 * fp + aip0 * gp);
    return {ai, aip};
}

// u_k coefficients of the asymptotic series, u_0 = 1.
inline double ucoef(int k, double prev) {
    // u_k = u_{k-1} * (6k-5)(6k-3)(6k-1) / (216 k (2k-1))
    double kk = k;
    return prev * (6 * kk - 5) * (6 * kk - 3) * (6 * kk - 1) / (216.0 * kk * (2 * kk - 1));
}

// x >= 5: Ai ~ e^{-zeta} / (2 sqrt(pi) x^{1/4}) sum (-1)^k u_k zeta^{-k}
inline std::pair<double, double> asym_pos(double x) {
    double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    double s = 1.0, sp = 1.0; // sums for Ai and Ai'
    double u = 1.0, v = 1.0;  // v_k = u_k (6k+1)/(1-6k)
    double zk = 1.0;
    double term = 1.0, prev_term = 1e300;
    for (int k = 1; k <= 24; ++k) {
        u = ucoef(k, u);
        v = u * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
        zk /= zeta;
        term = u * zk;
        if (std::abs(term) > std::abs(prev_term)) break; // optimal truncation
        prev_term = term;
        double sgn = (k % 2) ? -1.0 : 1.0;
        s += sgn * term;
        sp += sgn * v * zk;
    }
    double pre = std::exp(-zeta) / (2.0 * std::sqrt(M_PI) * std::pow(x, 0.25));
    double ai = pre * s;
    double aip = -std::exp(-zeta) * std::pow(x, 0.25) / (2.0 * std::sqrt(M_PI)) * sp;
    return {ai, aip};
}

// x <= -6.5: oscillatory asymptotics,
//   Ai(-t)  = pi^{-1/2} t^{-1/4} [ cos(w) P + sin(w) Q ],
//   Ai'(-t) = pi^{-1/2} t^{+1/4} [ sin(w) R - cos(w) S ],  w = zeta - pi/4,
// with P,Q (R,S) the even/odd alternating u_k (v_k) sums in 1/zeta.
inline std::pair<double, double> asym_neg(double x) {
    double ax = -x;
    double zeta = 2.0 / 3.0 * ax * std::sqrt(ax);
    double w = zeta - M_PI / 4.0;
    double P = 1.0, Q = 0.0, R = 1.0, S = 0.0;
    double u = 1.0, zk = 1.0;
    double prev = 1e300;
    for (int k = 1; k <= 24; ++k) {
        u = ucoef(k, u);
        double v = u * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
        zk /= zeta;
        double term = u * zk;
        if (std::abs(term) > std::abs(prev)) break;
        prev = term;
        double sgn = ((k / 2) % 2) ? -1.0 : 1.0; // (-1)^{floor(k/2)}
        if (k % 2 == 1) {
            Q += sgn * term;
            S += sgn * v * zk;
        } else {
            P += sgn * term;
            R += sgn * v * zk;
        }
    }
    double pre = 1.0 / (std::sqrt(M_PI) * std::pow(ax, 0.25));
    double ai = pre * (std::cos(w) * P + std::sin(w) * Q);
    double aip = std::pow(ax, 0.25) / std::sqrt(M_PI) * (std::sin(w) * R - std::cos(w) * S);
    return {ai, aip};
}

} // namespace airy_detail

// Seam locations balance series cancellation against the superasymptotic
// floor of the divergent expansions; worst-case relative error ~1e-8 near
// x = 5.8, far better elsewhere.
inline std::pair<double, double> airy_ai_both(double x) {
    if (x >= 5.8) return airy_detail::asym_pos(x);
    if (x <= -6.5) return airy_detail::asym_neg(x);
    return airy_detail::series(x);
}

inline double airy_ai(double x) { return airy_ai_both(x).first; }
inline double airy_ai_prime(double x) { return airy_ai_both(x).second; }

// Closed-form tail integral int_s^infty Ai^2 = Ai'(s)^2 - s Ai(s)^2.
inline double airy_ai_squared_tail(double s) {
    auto [ai, aip] = airy_ai_both(s);
    return aip * aip - s * ai * ai;
}

} // namespace novikov
