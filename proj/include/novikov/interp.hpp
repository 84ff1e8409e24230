#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "novikov/errors.hpp"

namespace novikov {

// Natural cubic spline on a strictly increasing grid.
class CubicSpline {
public:
    CubicSpline() = default;

    CubicSpline(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y)) {
        const std::size_t n = x_.size();
        if (n < 2 || y_.size() != n) throw config_error("CubicSpline: need >= 2 nodes");
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (!(x_[i] < x_[i + 1])) throw config_error("CubicSpline: grid not increasing");
        m_.assign(n, 0.0);
        if (n == 2) return;
        // tridiagonal solve for second derivatives, natural BCs
        std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), d(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            double hl = x_[i] - x_[i - 1], hr = x_[i + 1] - x_[i];
            a[i] = hl / 6.0;
            b[i] = (hl + hr) / 3.0;
            c[i] = hr / 6.0;
            d[i] = (y_[i + 1] - y_[i]) / hr - (y_[i] - y_[i - 1]) / hl;
        }
        for (std::size_t i = 2; i + 1 < n; ++i) {
            double w = a[i] / b[i - 1];
            b[i] -= w * c[i - 1];
            d[i] -= w * d[i - 1];
        }
        for (std::size_t i = n - 2; i >= 1; --i) {
            m_[i] = (d[i] - c[i] * m_[i + 1]) / b[i];
            if (i == 1) break;
        }
    }

    double operator()(double x) const {
        const std::size_t n = x_.size();
        if (x <= x_.front()) return extrapolate_left(x);
        if (x >= x_.back()) return extrapolate_right(x);
        std::size_t i = static_cast<std::size_t>(
            std::upper_bound(x_.begin(), x_.end(), x) - x_.begin() - 1);
        i = std::min(i, n - 2);
        double h = x_[i + 1] - x_[i];
        double A = (x_[i + 1] - x) / h, B = (x - x_[i]) / h;
        return A * y_[i] + B * y_[i + 1] +
               ((A * A * A - A) * m_[i] + (B * B * B - B) * m_[i + 1]) * h * h / 6.0;
    }

    double deriv(double x) const {
        const std::size_t n = x_.size();
        double xc = std::min(std::max(x, x_.front()), x_.back());
        std::size_t i = static_cast<std::size_t>(
            std::upper_bound(x_.begin(), x_.end(), xc) - x_.begin());
        i = (i == 0) ? 0 : i - 1;
        i = std::min(i, n - 2);
        double h = x_[i + 1] - x_[i];
        double A = (x_[i + 1] - xc) / h, B = (xc - x_[i]) / h;
        return (y_[i + 1] - y_[i]) / h +
               ((1.0 - 3.0 * A * A) * m_[i] + (3.0 * B * B - 1.0) * m_[i + 1]) * h / 6.0;
    }

    double xmin() const { return x_.front(); }
    double xmax() const { return x_.back(); }

private:
    // linear continuation outside the grid
    double extrapolate_left(double x) const {
        double s = deriv(x_.front());
        return y_.front() + s * (x - x_.front());
    }
    double extrapolate_right(double x) const {
        double s = deriv(x_.back());
        return y_.back() + s * (x - x_.back());
    }

    std::vector<double> x_, y_, m_;
};

// Monotone (Fritsch-Carlson) piecewise-cubic Hermite interpolant. Preserves
// monotonicity of the data; used to invert monotone parametric maps.
class MonotoneCubic {
public:
    MonotoneCubic() = default;

    MonotoneCubic(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y)) {
        const std::size_t n = x_.size();
        if (n < 2 || y_.size() != n) throw config_error("MonotoneCubic: need >= 2 nodes");
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (!(x_[i] < x_[i + 1])) throw config_error("MonotoneCubic: grid not increasing");
        d_.assign(n, 0.0);
        std::vector<double> s(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) s[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
        d_[0] = s[0];
        d_[n - 1] = s[n - 2];
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (s[i - 1] * s[i] <= 0.0)
                d_[i] = 0.0;
            else {
                double hl = x_[i] - x_[i - 1], hr = x_[i + 1] - x_[i];
                double w1 = 2.0 * hr + hl, w2 = hr + 2.0 * hl;
                d_[i] = (w1 + w2) / (w1 / s[i - 1] + w2 / s[i]);
            }
        }
    }

    double operator()(double x) const {
        const std::size_t n = x_.size();
        double xc = std::min(std::max(x, x_.front()), x_.back());
        std::size_t i = static_cast<std::size_t>(
            std::upper_bound(x_.begin(), x_.end(), xc) - x_.begin());
        i = (i == 0) ? 0 : i - 1;
        i = std::min(i, n - 2);
        double h = x_[i + 1] - x_[i];
        double t = (xc - x_[i]) / h;
        double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
        double h10 = t * (1 - t) * (1 - t);
        double h01 = t * t * (3 - 2 * t);
        double h11 = t * t * (t - 1);
        return h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] + h11 * h * d_[i + 1];
    }

    bool in_range(double x) const { return x >= x_.front() && x <= x_.back(); }

private:
    std::vector<double> x_, y_, d_;
};

} // namespace novikov
