#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

namespace novikov {

// 15-point Gauss-Legendre nodes/weights on [-1, 1].
inline const std::array<double, 15>& gl15_nodes() {
    static const std::array<double, 15> x = {
        -0.9879925180204854, -0.9372733924007060, -0.8482065834104272, -0.7244177313601701,
        -0.5709721726085388, -0.3941513470775634, -0.2011940939974345, 0.0,
        0.2011940939974345,  0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
        0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
    return x;
}
inline const std::array<double, 15>& gl15_weights() {
    static const std::array<double, 15> w = {
        0.0307532419961173, 0.0703660474881081, 0.1071592204671719, 0.1395706779261543,
        0.1662692058169939, 0.1861610000155622, 0.1984314853271116, 0.2025782419255613,
        0.1984314853271116, 0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
        0.1071592204671719, 0.0703660474881081, 0.0307532419961173};
    return w;
}

// Fixed-panel Gauss-Legendre quadrature of f over [a, b] split into n panels.
template <typename F>
auto gauss_panels(F&& f, double a, double b, int n_panels) -> decltype(f(0.0)) {
    using R = decltype(f(0.0));
    R total{};
    const auto& xs = gl15_nodes();
    const auto& ws = gl15_weights();
    double h = (b - a) / n_panels;
    for (int p = 0; p < n_panels; ++p) {
        double pa = a + p * h;
        double mid = pa + 0.5 * h, half = 0.5 * h;
        R s{};
        for (std::size_t i = 0; i < xs.size(); ++i) s += ws[i] * f(mid + half * xs[i]);
        total += s * half;
    }
    return total;
}

// Gauss-Legendre over an explicit panel edge list (nonuniform refinement).
template <typename F>
auto gauss_edges(F&& f, const std::vector<double>& edges) -> decltype(f(0.0)) {
    using R = decltype(f(0.0));
    R total{};
    const auto& xs = gl15_nodes();
    const auto& ws = gl15_weights();
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        double mid = 0.5 * (edges[p] + edges[p + 1]);
        double half = 0.5 * (edges[p + 1] - edges[p]);
        R s{};
        for (std::size_t i = 0; i < xs.size(); ++i) s += ws[i] * f(mid + half * xs[i]);
        total += s * half;
    }
    return total;
}

} // namespace novikov
