#pragma once

// Initial data handling: background normalization to kappa = 1, the momentum
// density m = u - u_xx + 1 with its derived coefficient fields, and the
// x -> y coordinate map. Analytic datum families carry exact derivatives;
// sampled data fall back to 4th-order finite differences.

#include <cmath>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "novikov/errors.hpp"
#include "novikov/interp.hpp"
#include "novikov/quad.hpp"

namespace novikov {

struct InitialDatum {
    std::vector<double> x;  // uniform grid
    std::vector<double> u0; // samples
    double kappa = 1.0;     // background value at both ends
};

// Record of the background normalization u -> kappa*u(x - kappa^2 t, kappa^2 t) + kappa.
struct BackgroundMap {
    double kappa = 1.0;
    // physical (x, t) of a normalized-coordinate event
    std::pair<double, double> to_physical(double xn, double tn) const {
        double t = tn / (kappa * kappa);
        return {xn + kappa * kappa * t, t};
    }
    std::pair<double, double> to_normalized(double x, double t) const {
        return {x - kappa * kappa * t, kappa * kappa * t};
    }
    double u_physical(double u_normalized) const { return kappa * u_normalized + kappa; }
    double u_normalized(double u_physical) const { return (u_physical - kappa) / kappa; }
};

inline InitialDatum normalize_background(const InitialDatum& d, BackgroundMap* map = nullptr) {
    if (!(d.kappa > 0.0)) throw regime_error("normalize_background: kappa must be positive");
    InitialDatum out;
    out.x = d.x;
    out.kappa = 1.0;
    out.u0.reserve(d.u0.size());
    for (double u : d.u0) out.u0.push_back((u - d.kappa) / d.kappa);
    if (map) *map = BackgroundMap{d.kappa};
    return out;
}

inline InitialDatum denormalize_background(const InitialDatum& d, const BackgroundMap& map) {
    InitialDatum out;
    out.x = d.x;
    out.kappa = map.kappa;
    out.u0.reserve(d.u0.size());
    for (double u : d.u0) out.u0.push_back(map.u_physical(u));
    return out;
}

struct MomentumProfile {
    std::vector<double> x;
    std::vector<double> mt; // u - u_xx + 1
    std::vector<double> q;  // mt^{1/3}
    std::vector<double> c1; // q_x / q
    std::vector<double> c2; // q^{-2} - q^2
};

namespace detail {
// 4th-order central second derivative on a uniform grid; the profile is
// assumed flat (background) beyond the ends.
inline std::vector<double> second_derivative4(const std::vector<double>& x,
                                              const std::vector<double>& u) {
    const std::size_t n = x.size();
    if (n < 7) throw config_error("second_derivative4: grid too short");
    double dx = x[1] - x[0];
    auto at = [&](long i) -> double {
        if (i < 0) return u.front();
        if (i >= static_cast<long>(n)) return u.back();
        return u[static_cast<std::size_t>(i)];
    };
    std::vector<double> dd(n);
    for (long i = 0; i < static_cast<long>(n); ++i)
        dd[static_cast<std::size_t>(i)] =
            (-at(i - 2) + 16 * at(i - 1) - 30 * at(i) + 16 * at(i + 1) - at(i + 2)) /
            (12 * dx * dx);
    return dd;
}

inline std::vector<double> first_derivative4(const std::vector<double>& x,
                                             const std::vector<double>& u) {
    const std::size_t n = x.size();
    double dx = x[1] - x[0];
    auto at = [&](long i) -> double {
        if (i < 0) return u.front();
        if (i >= static_cast<long>(n)) return u.back();
        return u[static_cast<std::size_t>(i)];
    };
    std::vector<double> d(n);
    for (long i = 0; i < static_cast<long>(n); ++i)
        d[static_cast<std::size_t>(i)] =
            (at(i - 2) - 8 * at(i - 1) + 8 * at(i + 1) - at(i + 2)) / (12 * dx);
    return d;
}
} // namespace detail

inline MomentumProfile momentum(const InitialDatum& d) {
    if (std::abs(d.kappa - 1.0) > 1e-14)
        throw config_error("momentum: datum must be normalized (kappa = 1) first");
    MomentumProfile p;
    p.x = d.x;
    auto uxx = detail::second_derivative4(d.x, d.u0);
    const std::size_t n = d.x.size();
    p.mt.resize(n);
    p.q.resize(n);
    p.c2.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        p.mt[i] = d.u0[i] - uxx[i] + 1.0;
        if (!(p.mt[i] > 0.0))
            throw sign_condition_error("momentum: u - u_xx + 1 <= 0 at x = " +
                                       std::to_string(d.x[i]));
        p.q[i] = std::cbrt(p.mt[i]);
        p.c2[i] = 1.0 / (p.q[i] * p.q[i]) - p.q[i] * p.q[i];
    }
    auto mtx = detail::first_derivative4(d.x, p.mt);
    p.c1.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.c1[i] = mtx[i] / (3.0 * p.mt[i]); // q_x/q
    return p;
}

struct YMap {
    std::vector<double> x;
    std::vector<double> y;
};

// y(x) = x - int_x^inf (q^2 - 1) ds, cumulative Simpson from the right end.
inline YMap ymap(const MomentumProfile& p) {
    const std::size_t n = p.x.size();
    YMap m;
    m.x = p.x;
    m.y.assign(n, 0.0);
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = p.q[i] * p.q[i] - 1.0;
    double dx = p.x[1] - p.x[0];
    std::vector<double> tail(n, 0.0); // int_{x_i}^{x_end} g
    for (std::size_t i = n - 1; i-- > 0;) {
        if (i + 2 < n) {
            // Simpson over [x_i, x_{i+2}] glued with the stored tail at i+2
            tail[i] = tail[i + 2] + dx / 3.0 * (g[i] + 4.0 * g[i + 1] + g[i + 2]);
        } else {
            tail[i] = tail[i + 1] + 0.5 * dx * (g[i] + g[i + 1]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) m.y[i] = p.x[i] - tail[i];
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(m.y[i] < m.y[i + 1]))
            throw numerical_error("ymap: output not strictly increasing near x = " +
                                  std::to_string(p.x[i]));
    return m;
}

// ---------------------------------------------------------------------------
// Coefficient field used by the Jost integrator: q^2, c1 = q_x/q,
// c2 = q^{-2} - q^2 as callables on a working interval.

class CoefficientField {
public:
    virtual ~CoefficientField() = default;
    virtual double q2(double x) const = 0;
    virtual double c1(double x) const = 0;
    virtual double c2(double x) const = 0;
    virtual double x_left() const = 0;
    virtual double x_right() const = 0;

    // int_R (q^2 - 1) dx over the working interval (tails assumed negligible)
    double total_q2m1() const {
        return gauss_panels([this](double x) { return q2(x) - 1.0; }, x_left(), x_right(), 256);
    }
};

// Analytic family with exact derivatives: u0 and its first three derivatives
// supplied as closures.
class AnalyticDatum final : public CoefficientField {
public:
    using Fn = std::function<double(double)>;

    AnalyticDatum(Fn u, Fn ux, Fn uxx, Fn uxxx, double xl, double xr)
        : u_(std::move(u)), ux_(std::move(ux)), uxx_(std::move(uxx)), uxxx_(std::move(uxxx)),
          xl_(xl), xr_(xr) {}

    static AnalyticDatum gaussian(double a, double w, double c = 0.0, double halfwidth = 12.0) {
        auto g = [a, w, c](double x) { return a * std::exp(-(x - c) * (x - c) / (w * w)); };
        auto gx = [g, w, c](double x) { return g(x) * (-2.0 * (x - c) / (w * w)); };
        auto gxx = [g, w, c](double x) {
            double s = (x - c) / w;
            return g(x) * (4.0 * s * s - 2.0) / (w * w);
        };
        auto gxxx = [g, w, c](double x) {
            double s = (x - c) / w;
            return g(x) * (-8.0 * s * s * s + 12.0 * s) / (w * w * w);
        };
        return AnalyticDatum(g, gx, gxx, gxxx, c - halfwidth, c + halfwidth);
    }

    static AnalyticDatum sech2(double a, double w, double c = 0.0, double halfwidth = 25.0) {
        auto s = [w, c](double x) { return 1.0 / std::cosh((x - c) / w); };
        auto th = [w, c](double x) { return std::tanh((x - c) / w); };
        auto u = [a, s](double x) { return a * s(x) * s(x); };
        auto ux = [a, s, th, w](double x) { return -2.0 * a * s(x) * s(x) * th(x) / w; };
        auto uxx = [a, s, th, w](double x) {
            double S = s(x), T = th(x);
            return 2.0 * a * S * S * (2.0 * T * T - S * S) / (w * w);
        };
        auto uxxx = [a, s, th, w](double x) {
            double S = s(x), T = th(x);
            return 4.0 * a * S * S * T * (2.0 * S * S - (2.0 * T * T - S * S)) / (w * w * w) -
                   4.0 * a * S * S * S * S * T / (w * w * w);
        };
        return AnalyticDatum(u, ux, uxx, uxxx, c - halfwidth, c + halfwidth);
    }

    double u0(double x) const { return u_(x); }

    double mt(double x) const { return u_(x) - uxx_(x) + 1.0; }
    double mtx(double x) const { return ux_(x) - uxxx_(x); }

    double q2(double x) const override {
        double m = mt(x);
        if (!(m > 0.0)) throw sign_condition_error("AnalyticDatum: sign condition violated");
        return std::cbrt(m * m);
    }
    double c1(double x) const override { return mtx(x) / (3.0 * mt(x)); }
    double c2(double x) const override {
        double q2v = q2(x);
        return 1.0 / q2v - q2v;
    }
    double x_left() const override { return xl_; }
    double x_right() const override { return xr_; }

    // minimum of mt over the interval (coarse scan), for sign-condition checks
    double mt_min() const {
        double lo = 1e308;
        for (int i = 0; i <= 4000; ++i) {
            double x = xl_ + (xr_ - xl_) * i / 4000.0;
            lo = std::min(lo, mt(x));
        }
        return lo;
    }

private:
    Fn u_, ux_, uxx_, uxxx_;
    double xl_, xr_;
};

// Sampled datum: spline-backed coefficient field built from a MomentumProfile.
class SampledDatum final : public CoefficientField {
public:
    explicit SampledDatum(const MomentumProfile& p)
        : q2_(p.x, square(p.q)), c1_(p.x, p.c1), c2_(p.x, p.c2), xl_(p.x.front()),
          xr_(p.x.back()) {}

    double q2(double x) const override { return clampq(q2_(clampx(x))); }
    double c1(double x) const override { return c1_(clampx(x)); }
    double c2(double x) const override { return c2_(clampx(x)); }
    double x_left() const override { return xl_; }
    double x_right() const override { return xr_; }

private:
    static std::vector<double> square(const std::vector<double>& v) {
        std::vector<double> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * v[i];
        return out;
    }
    double clampx(double x) const { return std::min(std::max(x, xl_), xr_); }
    static double clampq(double v) { return std::max(v, 1e-12); }

    CubicSpline q2_, c1_, c2_;
    double xl_, xr_;
};

} // namespace novikov
