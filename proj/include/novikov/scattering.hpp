#pragma once

// Direct scattering for the 3x3 x-part Lax pair at t = 0: Jost solutions,
// the scattering matrix S(z), and the reflection coefficient r(z).
//
// For z > 0 the Jost matrix normalized at +infinity is integrated right to
// left; columns 1,2 carry no parasitic growing mode in that direction and
// column 3's growth is the dominant (stable) mode. S comes from the
// absolutely convergent integral S = I - int_R e^{-ad Q} [U mu+] dx
// accumulated during the sweep. For z < 0 the mirrored computation with the
// Jost matrix normalized at -infinity yields S^{-1}.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "novikov/datum.hpp"
#include "novikov/errors.hpp"
#include "novikov/interp.hpp"
#include "novikov/mat3.hpp"
#include "novikov/ode.hpp"
#include "novikov/phase.hpp"

namespace novikov {

inline constexpr double unit_point_guard = 1e-3; // keep |z -+ 1| above this

// U(x, z) = U1 U2 with U1 = diag(1/(3 lambda_i^2 - 1)) and
// U2[i][j] = c1 lambda_j (lambda_i - lambda_j) + c2 lambda_j (off-diagonal),
// c2 lambda_i on the diagonal.
inline Mat3 lax_u(const CoefficientField& f, double x, const std::array<cplx, 3>& lam) {
    double c1 = f.c1(x), c2 = f.c2(x);
    Mat3 u;
    for (int i = 0; i < 3; ++i) {
        cplx d = 1.0 / (3.0 * lam[static_cast<size_t>(i)] * lam[static_cast<size_t>(i)] - 1.0);
        for (int j = 0; j < 3; ++j) {
            cplx u2 = (i == j) ? c2 * lam[static_cast<size_t>(i)]
                               : c1 * lam[static_cast<size_t>(j)] *
                                         (lam[static_cast<size_t>(i)] - lam[static_cast<size_t>(j)]) +
                                     c2 * lam[static_cast<size_t>(j)];
            u(i, j) = d * u2;
        }
    }
    return u;
}

struct JostOptions {
    double rtol = 1e-12;
    double atol = 1e-11; // absolute floor on the O(1) S-matrix scale
    int n_samples = 61; // dense samples stored along the sweep
};

struct JostSolution {
    double z = 0.0;
    int side = +1; // +1: normalized at +infinity, -1: at -infinity
    std::vector<double> x;
    std::vector<Mat3> mu;

    // max |det mu - 1| over samples whose entries stay moderate
    double det_residual(double entry_cap = 1e6) const {
        double worst = 0.0;
        for (const auto& m : mu) {
            if (m.norm_max() > entry_cap) continue;
            worst = std::max(worst, std::abs(m.det() - 1.0));
        }
        return worst;
    }

    Mat3 at(double xq) const {
        // nearest stored sample
        std::size_t best = 0;
        double bd = 1e308;
        for (std::size_t i = 0; i < x.size(); ++i) {
            double d = std::abs(x[i] - xq);
            if (d < bd) {
                bd = d;
                best = i;
            }
        }
        return mu[best];
    }
};

namespace detail {

inline std::array<cplx, 3> lambdas(double z) {
    return {lambda_branch(1, z), lambda_branch(2, z), lambda_branch(3, z)};
}

// Integrate the 3x3 Jost system in the mu-gauge together with the running
// phase p(x) and the S-integral accumulator. State layout:
// [Re mu(9), Im mu(9), Re acc(9), Im acc(9), p] -> 37 reals.
struct SweepResult {
    Mat3 mu_end;
    Mat3 acc;
    JostSolution dense;
};

// Largest |Re(lambda_i - lambda_j)| * |p| exponent the sweep will form; used
// to decide when the full S-matrix is representable in double precision.
inline double exponent_budget(const CoefficientField& f, double z) {
    double l3 = (std::abs(z) + 1.0 / std::abs(z)) / std::sqrt(3.0);
    return 1.5 * l3 * (f.x_right() - f.x_left());
}

// reduced = true integrates only the bounded block: mu columns 1,2, the
// (1..2)x(1..2) accumulator entries and acc(3,3); exact for s11, s12, s21,
// s22 at any |z|.
inline SweepResult sweep(const CoefficientField& f, double z, int side, const JostOptions& opt,
                         bool store_dense, bool reduced = false) {
    if (std::abs(std::abs(z) - 1.0) < unit_point_guard)
        throw singular_point_error("jost: z within the guard radius of +-1");
    if (std::abs(z) < 1e-6) throw singular_point_error("jost: z too close to 0");
    auto lam = lambdas(z);

    const double xl = f.x_left(), xr = f.x_right();
    const double x_start = (side > 0) ? xr : xl;
    const double x_end = (side > 0) ? xl : xr;
    const double p_start = (side > 0) ? xr : xl - f.total_q2m1();

    auto pack = [](const Mat3& m, const Mat3& a, double p, std::vector<double>& y) {
        for (int i = 0; i < 9; ++i) {
            y[static_cast<size_t>(i)] = m.a[static_cast<size_t>(i)].real();
            y[static_cast<size_t>(9 + i)] = m.a[static_cast<size_t>(i)].imag();
            y[static_cast<size_t>(18 + i)] = a.a[static_cast<size_t>(i)].real();
            y[static_cast<size_t>(27 + i)] = a.a[static_cast<size_t>(i)].imag();
        }
        y[36] = p;
    };
    auto unpack_mu = [](const std::vector<double>& y) {
        Mat3 m;
        for (int i = 0; i < 9; ++i)
            m.a[static_cast<size_t>(i)] =
                cplx(y[static_cast<size_t>(i)], y[static_cast<size_t>(9 + i)]);
        return m;
    };
    auto unpack_acc = [](const std::vector<double>& y) {
        Mat3 m;
        for (int i = 0; i < 9; ++i)
            m.a[static_cast<size_t>(i)] =
                cplx(y[static_cast<size_t>(18 + i)], y[static_cast<size_t>(27 + i)]);
        return m;
    };

    auto rhs = [&](double x, const std::vector<double>& y, std::vector<double>& dy) {
        Mat3 mu = unpack_mu(y);
        double p = y[36];
        double q2 = f.q2(x);
        Mat3 u = lax_u(f, x, lam);
        Mat3 umu = u * mu;
        Mat3 dmu, dacc;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (reduced && j == 2 && i != 2) continue; // frozen third column
                cplx lij = lam[static_cast<size_t>(i)] - lam[static_cast<size_t>(j)];
                dmu(i, j) = q2 * lij * mu(i, j) + umu(i, j);
                bool keep_acc = !reduced || (i < 2 && j < 2) || (i == 2 && j == 2);
                if (keep_acc) dacc(i, j) = std::exp(-lij * p) * umu(i, j);
            }
        if (reduced) {
            dmu(0, 2) = dmu(1, 2) = dmu(2, 2) = 0.0;
        }
        dy.resize(37);
        pack(dmu, dacc, q2, dy);
    };

    std::vector<double> y(37, 0.0);
    pack(Mat3::identity(), Mat3::zero(), p_start, y);

    Dop853 stepper;
    stepper.rtol = opt.rtol;
    stepper.atol = opt.atol;
    stepper.h_init = 1e-3;
    stepper.max_steps = 5'000'000;

    SweepResult res;
    res.dense.z = z;
    res.dense.side = side;
    if (store_dense) {
        // integrate in segments so samples land exactly on the sample grid
        const int n = opt.n_samples;
        res.dense.x.resize(static_cast<size_t>(n));
        res.dense.mu.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            res.dense.x[static_cast<size_t>(i)] =
                x_start + (x_end - x_start) * i / double(n - 1);
        res.dense.mu.push_back(unpack_mu(y));
        for (int i = 1; i < n; ++i) {
            stepper.integrate(rhs, res.dense.x[static_cast<size_t>(i - 1)],
                              res.dense.x[static_cast<size_t>(i)], y);
            res.dense.mu.push_back(unpack_mu(y));
        }
    } else {
        stepper.integrate(rhs, x_start, x_end, y);
    }
    res.mu_end = unpack_mu(y);
    res.acc = unpack_acc(y);
    return res;
}

} // namespace detail

inline JostSolution jost(const CoefficientField& f, double z, int side,
                         const JostOptions& opt = {}) {
    auto res = detail::sweep(f, z, side, opt, true);
    return res.dense;
}

// Full scattering matrix S(z) for real z (z off the guard disks at 0, +-1).
// Only available while the extreme S-entries stay representable.
inline Mat3 scattering_matrix(const CoefficientField& f, double z, const JostOptions& opt = {}) {
    if (detail::exponent_budget(f, z) > 600.0)
        throw numerical_error("scattering_matrix: |z| outside the representable band; "
                              "use reflection() which switches to the reduced sweep");
    if (z > 0.0) {
        auto res = detail::sweep(f, z, +1, opt, false);
        // sweep direction xr -> xl accumulates -int_{xl}^{xr}; S = I + acc
        return Mat3::identity() + res.acc;
    }
    auto res = detail::sweep(f, z, -1, opt, false);
    Mat3 sinv = Mat3::identity() + res.acc;
    return sinv.inverse();
}

// Reflection coefficient. On the positive axis r = s12/s11; on the negative
// axis s12 is not defined by a convergent integral and r comes from the
// adjugate entries instead, r = (S^{-1})_{21} / (S^{-1})_{11}, which the
// mu^- sweep yields directly. Both routes avoid forming the full inverse and
// remain valid at any |z| through the reduced sweep.
inline cplx reflection(const CoefficientField& f, double z, const JostOptions& opt = {}) {
    bool reduced = detail::exponent_budget(f, z) > 600.0;
    if (z > 0.0) {
        auto res = detail::sweep(f, z, +1, opt, false, reduced);
        Mat3 S = Mat3::identity() + res.acc;
        if (std::abs(S(0, 0)) < 1e-12)
            throw numerical_error("reflection: s11 vanished (spectral singularity?)");
        return S(0, 1) / S(0, 0);
    }
    auto res = detail::sweep(f, z, -1, opt, false, reduced);
    Mat3 B = Mat3::identity() + res.acc; // = S^{-1}
    if (std::abs(B(0, 0)) < 1e-12)
        throw numerical_error("reflection: adjugate s11 vanished (spectral singularity?)");
    return B(1, 0) / B(0, 0);
}

// ---------------------------------------------------------------------------
// Sampled reflection coefficient on a clustered grid.

struct ReflectionCoefficient {
    std::vector<double> zgrid; // sorted; avoids 0 and +-1
    std::vector<cplx> r;

    bool small_data() const {
        for (const auto& v : r)
            if (std::abs(v) >= 1.0) return false;
        return true;
    }

    double sup_abs() const {
        double m = 0.0;
        for (const auto& v : r) m = std::max(m, std::abs(v));
        return m;
    }

    cplx operator()(double z) const {
        if (!re_pos_.in_range(z) && !re_neg_.in_range(z)) {
            // decay tail ~ C/z beyond the grid; r(0) = 0 by definition
            if (std::abs(z) < zgrid_abs_min_) return 0.0;
            double edge = (z > 0) ? re_pos_x_max_ : re_neg_x_min_;
            return (*this)(edge)*edge / z;
        }
        if (z > 0) return {re_pos_(z), im_pos_(z)};
        return {re_neg_(z), im_neg_(z)};
    }

    double abs2(double z) const {
        cplx v = (*this)(z);
        double a2 = std::norm(v);
        return std::min(a2, 1.0 - 1e-14);
    }

    void build_interpolants() {
        std::vector<double> zp, zn;
        std::vector<double> rp_re, rp_im, rn_re, rn_im;
        for (std::size_t i = 0; i < zgrid.size(); ++i) {
            if (zgrid[i] > 0) {
                zp.push_back(zgrid[i]);
                rp_re.push_back(r[i].real());
                rp_im.push_back(r[i].imag());
            } else {
                zn.push_back(zgrid[i]);
                rn_re.push_back(r[i].real());
                rn_im.push_back(r[i].imag());
            }
        }
        if (zp.size() < 4 || zn.size() < 4)
            throw config_error("ReflectionCoefficient: need samples on both half-lines");
        re_pos_ = MonotoneGuard(zp, rp_re);
        im_pos_ = MonotoneGuard(zp, rp_im);
        re_neg_ = MonotoneGuard(zn, rn_re);
        im_neg_ = MonotoneGuard(zn, rn_im);
        re_pos_x_max_ = zp.back();
        re_neg_x_min_ = zn.front();
        zgrid_abs_min_ = std::min(zp.front(), -zn.back());
    }

private:
    // plain cubic spline with range query
    struct MonotoneGuard {
        CubicSpline s;
        double lo = 0.0, hi = 0.0;
        MonotoneGuard() = default;
        MonotoneGuard(const std::vector<double>& x, const std::vector<double>& y)
            : s(x, y), lo(x.front()), hi(x.back()) {}
        bool in_range(double x) const { return x >= lo && x <= hi; }
        double operator()(double x) const { return s(x); }
    };
    MonotoneGuard re_pos_, im_pos_, re_neg_, im_neg_;
    double re_pos_x_max_ = 0.0, re_neg_x_min_ = 0.0, zgrid_abs_min_ = 0.0;

public:
    bool in_grid_range(double z) const {
        return (z > 0) ? re_pos_.in_range(z) : re_neg_.in_range(z);
    }
};

// Working grid: geometric clustering into the guard radius at +-1, coverage
// of the collision band [zb - 0.2, za + 0.2], algebraic tails, mirrored to
// the negative axis.
inline std::vector<double> reflection_grid(int n_band = 120, double guard = unit_point_guard,
                                           double z_min = 0.05, double z_max = 8.0) {
    std::vector<double> g;
    // geometric ladders into 1 from both sides
    for (double h = 0.4; h > guard; h /= 1.30) {
        g.push_back(1.0 - h);
        g.push_back(1.0 + h);
    }
    g.push_back(1.0 - guard);
    g.push_back(1.0 + guard);
    // collision band and midrange coverage
    double zb = collision_zb(), za = collision_za();
    for (int i = 0; i < n_band; ++i) {
        double s = double(i) / (n_band - 1);
        g.push_back(zb - 0.2 + s * (za + 0.2 - (zb - 0.2)));
    }
    // inner and outer algebraic tails
    for (int i = 0; i < 24; ++i) g.push_back(z_min * std::pow((zb - 0.2) / z_min, i / 23.0));
    for (int i = 0; i < 24; ++i) g.push_back((za + 0.2) * std::pow(z_max / (za + 0.2), i / 23.0));
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end(),
                        [](double a, double b) { return std::abs(a - b) < 1e-12; }),
            g.end());
    // drop anything inside the guard disks
    std::vector<double> out;
    for (double z : g)
        if (std::abs(z - 1.0) >= guard * (1.0 - 1e-12) && z >= z_min && z <= z_max)
            out.push_back(z);
    std::vector<double> full;
    for (auto it = out.rbegin(); it != out.rend(); ++it) full.push_back(-*it);
    for (double z : out) full.push_back(z);
    return full;
}

inline int worker_count() {
    if (const char* env = std::getenv("NOVIKOV_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

inline ReflectionCoefficient build_reflection(const CoefficientField& f,
                                              const std::vector<double>& grid,
                                              const JostOptions& opt = {}) {
    ReflectionCoefficient rc;
    rc.zgrid = grid;
    rc.r.assign(grid.size(), cplx{});
    const int nw = std::min<int>(worker_count(), static_cast<int>(grid.size()));
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    std::vector<std::string> errors(static_cast<size_t>(nw));
    for (int w = 0; w < nw; ++w) {
        pool.emplace_back([&, w] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= grid.size()) return;
                try {
                    rc.r[i] = reflection(f, grid[i], opt);
                } catch (const std::exception& e) {
                    errors[static_cast<size_t>(w)] = e.what();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (!e.empty()) throw numerical_error("build_reflection: " + e);
    rc.build_interpolants();
    return rc;
}

} // namespace novikov
