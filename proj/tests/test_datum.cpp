#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "novikov/datum.hpp"
#include "novikov/phase.hpp"

using namespace novikov;
using Catch::Approx;

namespace {
InitialDatum make_datum(double kappa, double a, double w, double L = 15.0, int n = 3001) {
    InitialDatum d;
    d.kappa = kappa;
    d.x.resize(static_cast<size_t>(n));
    d.u0.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = -L + 2 * L * i / (n - 1);
        d.x[static_cast<size_t>(i)] = x;
        d.u0[static_cast<size_t>(i)] = kappa + a * std::exp(-x * x / (w * w));
    }
    return d;
}
} // namespace

TEST_CASE("background normalization", "[datum]") {
    SECTION("kappa = 1 is the identity") {
        auto d = make_datum(1.0, 0.3, 1.5);
        auto n = normalize_background(d);
        for (std::size_t i = 0; i < d.x.size(); ++i)
            CHECK(n.u0[i] == Approx(d.u0[i] - 1.0).margin(1e-15));
    }
    SECTION("constant background maps to zero") {
        auto d = make_datum(2.0, 0.0, 1.0);
        auto n = normalize_background(d);
        for (double u : n.u0) CHECK(u == 0.0);
    }
    SECTION("round trip on kappa = 2") {
        auto d = make_datum(2.0, 0.4, 1.2);
        BackgroundMap map;
        auto n = normalize_background(d, &map);
        auto back = denormalize_background(n, map);
        double worst = 0.0;
        for (std::size_t i = 0; i < d.u0.size(); ++i)
            worst = std::max(worst, std::abs(back.u0[i] - d.u0[i]));
        CHECK(worst < 1e-14);
        auto [x, t] = map.to_physical(3.0, 8.0);
        auto [xn, tn] = map.to_normalized(x, t);
        CHECK(xn == Approx(3.0).margin(1e-14));
        CHECK(tn == Approx(8.0).margin(1e-14));
    }
    CHECK_THROWS_AS(normalize_background(make_datum(-1.0, 0.0, 1.0)), regime_error);
}

TEST_CASE("momentum profile", "[datum]") {
    SECTION("zero datum") {
        auto d = make_datum(1.0, 0.0, 1.0);
        auto p = momentum(normalize_background(d));
        for (std::size_t i = 0; i < p.x.size(); ++i) {
            CHECK(p.mt[i] == Approx(1.0).margin(1e-13));
            CHECK(p.q[i] == Approx(1.0).margin(1e-13));
            CHECK(std::abs(p.c1[i]) < 1e-13);
            CHECK(std::abs(p.c2[i]) < 1e-13);
        }
    }
    SECTION("sech^2 hump against the symbolic momentum") {
        double a = 0.1;
        InitialDatum d;
        int n = 4001;
        d.kappa = 1.0;
        for (int i = 0; i < n; ++i) {
            double x = -20.0 + 40.0 * i / (n - 1);
            d.x.push_back(x);
            double s = 1.0 / std::cosh(x);
            d.u0.push_back(a * s * s);
        }
        auto p = momentum(d);
        double worst = 0.0;
        for (std::size_t i = 0; i < p.x.size(); ++i) {
            double x = p.x[i];
            double s = 1.0 / std::cosh(x), th = std::tanh(x);
            double uxx = 2.0 * a * s * s * (2.0 * th * th - s * s);
            double expect = a * s * s - uxx + 1.0;
            worst = std::max(worst, std::abs(p.mt[i] - expect));
            CHECK(p.mt[i] > 0.0);
        }
        CHECK(worst < 1e-8); // 4th-order differences on dx = 0.01
    }
    SECTION("sign-condition violation raises") {
        InitialDatum d;
        int n = 2001;
        d.kappa = 1.0;
        for (int i = 0; i < n; ++i) {
            double x = -15.0 + 30.0 * i / (n - 1);
            d.x.push_back(x);
            d.u0.push_back(-2.0 * std::exp(-x * x)); // symbolic min of u - u'' + 1 < 0
        }
        CHECK_THROWS_AS(momentum(d), sign_condition_error);
    }
}

TEST_CASE("y map", "[datum]") {
    SECTION("identity for q = 1") {
        auto p = momentum(normalize_background(make_datum(1.0, 0.0, 1.0)));
        auto m = ymap(p);
        for (std::size_t i = 0; i < m.x.size(); ++i)
            CHECK(m.y[i] == Approx(m.x[i]).margin(1e-12));
    }
    SECTION("Gaussian q^2 - 1 against the Gaussian-integral oracle") {
        // synthetic profile with q^2 = 1 + e^{-x^2}: y(0) = -sqrt(pi)/2
        MomentumProfile p;
        int n = 4001;
        for (int i = 0; i < n; ++i) {
            double x = -20.0 + 40.0 * i / (n - 1);
            p.x.push_back(x);
            double q2 = 1.0 + std::exp(-x * x);
            p.mt.push_back(std::pow(q2, 1.5));
            p.q.push_back(std::sqrt(q2));
            p.c1.push_back(0.0);
            p.c2.push_back(1.0 / q2 - q2);
        }
        auto m = ymap(p);
        std::size_t mid = static_cast<size_t>(n / 2);
        CHECK(p.x[mid] == 0.0);
        CHECK(m.y[mid] == Approx(-std::sqrt(pi) / 2.0).margin(1e-9));
        CHECK(m.y.back() == Approx(p.x.back()).margin(1e-12));
    }
    SECTION("monotone for random small data") {
        std::mt19937 g(7u);
        std::uniform_real_distribution<double> amp(-0.2, 0.2);
        for (int trial = 0; trial < 5; ++trial) {
            auto d = make_datum(1.0, amp(g), 1.0 + trial * 0.3);
            auto m = ymap(momentum(normalize_background(d)));
            for (std::size_t i = 0; i + 1 < m.y.size(); ++i) REQUIRE(m.y[i] < m.y[i + 1]);
        }
    }
}

TEST_CASE("analytic datum coefficient field", "[datum]") {
    auto f = AnalyticDatum::gaussian(0.3, 1.5);
    for (double x : {-2.0, -0.3, 0.9, 2.7}) {
        double h = 1e-5;
        double q2fd = std::cbrt(std::pow(f.mt(x), 2.0));
        CHECK(f.q2(x) == Approx(q2fd).epsilon(1e-12));
        double mtx_fd = (f.mt(x + h) - f.mt(x - h)) / (2 * h);
        CHECK(f.c1(x) == Approx(mtx_fd / (3.0 * f.mt(x))).margin(1e-8));
    }
    CHECK(f.mt_min() > 0.0);
    // sampled field approximates the analytic one
    InitialDatum d;
    int n = 6001;
    d.kappa = 1.0;
    for (int i = 0; i < n; ++i) {
        double x = -15.0 + 30.0 * i / (n - 1);
        d.x.push_back(x);
        d.u0.push_back(f.u0(x));
    }
    SampledDatum sf(momentum(d));
    for (double x : {-3.0, 0.0, 1.1}) {
        CHECK(sf.q2(x) == Approx(f.q2(x)).margin(1e-8));
        CHECK(sf.c1(x) == Approx(f.c1(x)).margin(1e-7));
        CHECK(sf.c2(x) == Approx(f.c2(x)).margin(1e-7));
    }
    // sech2 family derivative consistency
    auto s2 = AnalyticDatum::sech2(0.1, 1.0);
    for (double x : {-1.3, 0.4, 2.2}) {
        double h = 1e-5;
        double mtx_fd = (s2.mt(x + h) - s2.mt(x - h)) / (2 * h);
        CHECK(s2.c1(x) == Approx(mtx_fd / (3.0 * s2.mt(x))).margin(1e-8));
    }
}
