#pragma once

// Ablowitz-Segur Painleve II transcendents: v'' = 2 v^3 + s v with
// v(s) ~ alpha Ai(s) as s -> +infinity, 0 <= alpha < 1. Solved by adaptive
// embedded RK integration backward from the Airy matching region, together
// with the tail integral J(s) = int_s^infty v^2. Off-node values come from a
// local Taylor expansion generated by the ODE itself, so the dense output
// satisfies the equation to machine accuracy.

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "novikov/airy.hpp"
#include "novikov/errors.hpp"
#include "novikov/mat3.hpp"
#include "novikov/ode.hpp"

namespace novikov {

struct ASParameter {
    double alpha = 0.0;
    explicit ASParameter(double a) : alpha(a) {
        if (!(a >= 0.0) || !(a < 1.0))
            throw regime_error("ASParameter: alpha must lie in [0, 1)");
    }
};

class PIISolution {
public:
    static constexpr int taylor_order = 10;

    PIISolution() = default;

    double s_min() const { return smin_; }
    double s_max() const { return smax_; }
    double alpha() const { return alpha_; }
    const std::vector<double>& grid() const { return sgrid_; }

    double v(double s) const { return eval(s).v; }
    double vp(double s) const { return eval(s).vp; }
    // J(s) = int_s^infty v^2; Airy closed-form tail beyond s_max.
    double J(double s) const { return std::max(0.0, eval(s).J); }

    // Leading local-model coefficient matrix,
    //   (1/2) [[-i J, v, 0], [v, i J, 0], [0, 0, 0]].
    Mat3 m1p(double s) const {
        auto e = eval(s);
        Mat3 m;
        cplx iJ = cplx(0.0, std::max(0.0, e.J));
        m(0, 0) = -0.5 * iJ;
        m(1, 1) = 0.5 * iJ;
        m(0, 1) = m(1, 0) = 0.5 * e.v;
        return m;
    }

    friend PIISolution solve_pii(double alpha, double s_min, double s_max);

private:
    struct Eval {
        double v, vp, J;
    };

    // Taylor coefficients of v about s0 from the recurrence
    //   (k+2)(k+1) c_{k+2} = 2 (v*v*v)_k + s0 c_k + c_{k-1}.
    static std::array<double, taylor_order + 1> taylor_coeffs(double s0, double v0, double vp0) {
        std::array<double, taylor_order + 1> c{};
        c[0] = v0;
        c[1] = vp0;
        for (int k = 0; k + 2 <= taylor_order; ++k) {
            double cube = 0.0;
            for (int i = 0; i <= k; ++i)
                for (int j = 0; j + i <= k; ++j) cube += c[i] * c[j] * c[k - i - j];
            double rhs = 2.0 * cube + s0 * c[k] + (k >= 1 ? c[k - 1] : 0.0);
            c[k + 2] = rhs / ((k + 2.0) * (k + 1.0));
        }
        return c;
    }

    Eval eval(double s) const {
        if (s < smin_ - 1e-12 || s > smax_ + 1e-12)
            throw regime_error("PIISolution: s outside solved range");
        s = std::min(std::max(s, smin_), smax_);
        // nearest node (uniform grid)
        std::size_t i = static_cast<std::size_t>(std::lround((s - smin_) / h_));
        i = std::min(i, sgrid_.size() - 1);
        double d = s - sgrid_[i];
        auto c = taylor_coeffs(sgrid_[i], vn_[i], vpn_[i]);
        double v = 0.0, vp = 0.0;
        for (int k = taylor_order; k >= 1; --k) {
            v = v * d + c[static_cast<size_t>(k)];
            vp = vp * d + c[static_cast<size_t>(k)] * k;
        }
        v = v * d + c[0];
        // J(s) = J_i - int_{s_i}^{s} v^2; integrate the squared Taylor series
        double J = Jn_[i];
        std::array<double, 2 * taylor_order + 1> sq{};
        for (int a = 0; a <= taylor_order; ++a)
            for (int b = 0; b <= taylor_order; ++b)
                sq[static_cast<size_t>(a + b)] += c[static_cast<size_t>(a)] * c[static_cast<size_t>(b)];
        double dp = d;
        for (int k = 0; k <= 2 * taylor_order; ++k) {
            J -= sq[static_cast<size_t>(k)] * dp / (k + 1.0);
            dp *= d;
        }
        return {v, vp, J};
    }

    double smin_ = 0.0, smax_ = 0.0, alpha_ = 0.0, h_ = 0.01;
    std::vector<double> sgrid_, vn_, vpn_, Jn_;
};

inline PIISolution solve_pii(double alpha, double s_min = -10.0, double s_max = 8.0) {
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw regime_error("solve_pii: alpha must lie in [0, 1)");
    if (!(s_max >= 6.0)) throw regime_error("solve_pii: s_max must be >= 6 (Airy regime)");
    if (!(s_min < s_max)) throw config_error("solve_pii: empty interval");

    PIISolution sol;
    sol.alpha_ = alpha;
    sol.smax_ = s_max;

    const double h = 0.01;
    const int n = static_cast<int>(std::ceil((s_max - s_min) / h)) + 1;
    sol.h_ = h;
    sol.smin_ = s_max - (n - 1) * h;

    std::vector<double> sg(static_cast<size_t>(n)), vv(static_cast<size_t>(n)),
        vvp(static_cast<size_t>(n)), vJ(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) sg[static_cast<size_t>(i)] = s_max - i * h;

    // seed at s_max from the Airy asymptotics; J gets the closed-form tail
    std::vector<double> y = {alpha * airy_ai(s_max), alpha * airy_ai_prime(s_max),
                             alpha * alpha * airy_ai_squared_tail(s_max)};
    vv[0] = y[0];
    vvp[0] = y[1];
    vJ[0] = y[2];

    Dop853 stepper;
    stepper.rtol = 1e-12;
    stepper.atol = 1e-14;
    stepper.h_init = 1e-3;
    auto rhs = [](double s, const std::vector<double>& q, std::vector<double>& d) {
        d[0] = q[1];
        d[1] = 2.0 * q[0] * q[0] * q[0] + s * q[0];
        d[2] = -q[0] * q[0]; // dJ/ds = -v^2
    };
    for (int i = 1; i < n; ++i) {
        stepper.integrate(rhs, sg[static_cast<size_t>(i - 1)], sg[static_cast<size_t>(i)], y);
        if (std::abs(y[0]) > 1e6)
            throw regime_error("solve_pii: blow-up detected (alpha outside the regular regime?)");
        vv[static_cast<size_t>(i)] = y[0];
        vvp[static_cast<size_t>(i)] = y[1];
        vJ[static_cast<size_t>(i)] = y[2];
    }

    std::reverse(sg.begin(), sg.end());
    std::reverse(vv.begin(), vv.end());
    std::reverse(vvp.begin(), vvp.end());
    std::reverse(vJ.begin(), vJ.end());
    sol.sgrid_ = std::move(sg);
    sol.vn_ = std::move(vv);
    sol.vpn_ = std::move(vvp);
    sol.Jn_ = std::move(vJ);
    return sol;
}

inline double tail_integral(const PIISolution& sol, double s) { return sol.J(s); }

} // namespace novikov
