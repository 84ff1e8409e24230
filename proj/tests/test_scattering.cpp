#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "novikov/scattering.hpp"

using namespace novikov;
using Catch::Approx;

namespace {
const AnalyticDatum& gauss_field() {
    static AnalyticDatum f = AnalyticDatum::gaussian(0.1, 1.5);
    return f;
}
// zero datum: u0 = 0, all coefficients vanish
struct ZeroField final : CoefficientField {
    double q2(double) const override { return 1.0; }
    double c1(double) const override { return 0.0; }
    double c2(double) const override { return 0.0; }
    double x_left() const override { return -12.0; }
    double x_right() const override { return 12.0; }
};
} // namespace

TEST_CASE("zero datum gives trivial Jost and S", "[scattering]") {
    ZeroField f;
    auto j = jost(f, 2.0, +1);
    for (const auto& m : j.mu) CHECK((m - Mat3::identity()).norm_max() < 1e-12);
    Mat3 S = scattering_matrix(f, 2.0);
    CHECK((S - Mat3::identity()).norm_max() < 1e-12);
    CHECK(std::abs(reflection(f, 2.0)) < 1e-12);
    CHECK(std::abs(reflection(f, -1.7)) < 1e-12);
}

TEST_CASE("Jost determinant and symmetries, Gaussian datum", "[scattering]") {
    const auto& f = gauss_field();
    SECTION("det mu = 1 at z = 2") {
        auto j = jost(f, 2.0, +1);
        CHECK(j.det_residual() < 1e-10);
        // value at x = 0 specifically
        CHECK(std::abs(j.at(0.0).det() - 1.0) < 1e-10);
        auto jm = jost(f, 2.0, -1);
        CHECK(jm.det_residual() < 1e-10);
    }
    SECTION("inversion symmetry mu(z) = conj(mu(1/z)) for real z") {
        auto j2 = jost(f, 2.0, +1);
        auto jh = jost(f, 0.5, +1);
        double worst = 0.0;
        for (double x : {-6.0, -2.0, 0.0, 3.0}) {
            Mat3 a = j2.at(x);
            Mat3 b = jh.at(x).conj();
            worst = std::max(worst, (a - b).norm_max());
        }
        CHECK(worst < 1e-8);
    }
    SECTION("Gamma1 conjugation symmetry on the real axis") {
        // for real z: mu(z) = Gamma1 conj(mu(z)) Gamma1
        for (double z : {0.4, 1.6, 2.6, 3.7}) {
            auto j = jost(f, z, +1);
            Mat3 m = j.at(1.0);
            Mat3 g = gamma1() * m.conj() * gamma1();
            CHECK((m - g).norm_max() < 1e-9);
        }
    }
}

TEST_CASE("scattering matrix properties, Gaussian datum", "[scattering]") {
    const auto& f = gauss_field();
    SECTION("det S = 1 and conjugation structure, positive axis") {
        for (double z : {0.45, 1.3, 2.0, 2.19}) {
            Mat3 S = scattering_matrix(f, z);
            INFO("z = " << z);
            CHECK(std::abs(S.det() - 1.0) < 1e-9);
            CHECK(std::abs(S(1, 0) - std::conj(S(0, 1))) < 1e-9);
            CHECK(std::abs(S(1, 1) - std::conj(S(0, 0))) < 1e-9);
        }
    }
    SECTION("det S = 1 and adjugate structure, negative axis") {
        for (double z : {-0.6, -1.9}) {
            Mat3 S = scattering_matrix(f, z);
            INFO("z = " << z);
            CHECK(std::abs(S.det() - 1.0) < 1e-8);
            Mat3 B = S.inverse();
            CHECK(std::abs(B(1, 0) - std::conj(B(0, 1))) < 1e-9);
            CHECK(std::abs(B(1, 1) - std::conj(B(0, 0))) < 1e-9);
        }
    }
    SECTION("|r(-z)| = |r(z)| evenness of the modulus") {
        for (double z : {0.45, 1.3, 2.19})
            CHECK(std::abs(reflection(f, -z)) == Approx(std::abs(reflection(f, z))).epsilon(1e-6));
    }
    SECTION("S -> I entrywise in the upper block as z grows") {
        double n50 = 0.0, n100 = 0.0;
        for (int i : {0, 1}) {
            Mat3 S50 = scattering_matrix(f, 50.0), S100 = scattering_matrix(f, 100.0);
            n50 = std::max({n50, std::abs(S50(0, i) - (i == 0 ? 1.0 : 0.0)),
                            std::abs(S50(1, i) - (i == 1 ? 1.0 : 0.0))});
            n100 = std::max({n100, std::abs(S100(0, i) - (i == 0 ? 1.0 : 0.0)),
                             std::abs(S100(1, i) - (i == 1 ? 1.0 : 0.0))});
        }
        Mat3 S8 = scattering_matrix(f, 8.0);
        double n8 = std::max(std::abs(S8(0, 0) - 1.0), std::abs(S8(0, 1)));
        CHECK(n50 < n8);
        CHECK(n100 < n50);
    }
    SECTION("guard radius near the unit points") {
        CHECK_THROWS_AS(scattering_matrix(f, 1.0005), singular_point_error);
        CHECK_THROWS_AS(scattering_matrix(f, -0.9999), singular_point_error);
    }
}

TEST_CASE("reflection coefficient, Gaussian datum", "[scattering]") {
    const auto& f = gauss_field();
    SECTION("involution r(z) = conj(r(1/z)) on both half-lines") {
        for (double z : {2.0, 1.45, 3.1, -2.0, -1.45}) {
            cplx a = reflection(f, z);
            cplx b = reflection(f, 1.0 / z);
            CHECK(std::abs(a - std::conj(b)) < 1e-6);
        }
    }
    SECTION("|r| < 1 on the working grid and decay at large z") {
        auto grid = reflection_grid(40);
        auto rc = build_reflection(f, grid);
        CHECK(rc.small_data());
        // |r(z)| <= C/|z| for |z| >= 10: fitted decay exponent >= 1
        double r10 = std::abs(reflection(f, 10.0));
        double r40 = std::abs(reflection(f, 40.0));
        double expo = std::log(r10 / r40) / std::log(40.0 / 10.0);
        CHECK(expo >= 1.0);
    }
    SECTION("grid refinement stability of the interpolant") {
        auto rc1 = build_reflection(f, reflection_grid(40));
        auto rc2 = build_reflection(f, reflection_grid(80));
        double worst = 0.0;
        for (double z : {0.6, 1.3, 2.0, 2.19, -2.0})
            worst = std::max(worst, std::abs(rc1(z) - rc2(z)));
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("edge behavior near z = +-1 is generic (|r| -> 1)", "[scattering]") {
    // The working class of data keeps |r| < 1 strictly away from the unit
    // points, but |r(1 +- h)| climbs toward 1 as h -> 0 for generic data:
    // document the measured trend (the vanishing-edge condition |r(+-1)| = 0
    // characterizes a non-generic subclass; see the acceptance suite notes).
    const auto& f = gauss_field();
    double prev = 0.0;
    for (double h : {0.2, 0.1, 0.05, 0.02}) {
        double v = std::abs(reflection(f, 1.0 + h));
        CHECK(v < 1.0);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(prev > 0.5); // well on its way to 1, not to 0
}

TEST_CASE("jump recomposition fixes the r-extraction convention", "[scattering]") {
    // e^{-ad Q}(mu^-)^{-1} mu^+ equals S(z); with r := s12/s11 the linear-
    // regime jump factorization [[1, -r],[conj r, 1 - |r|^2]] matches S - I
    // up to O(|r|^2) with the sign conventions frozen here.
    auto weak = AnalyticDatum::gaussian(0.01, 1.5);
    for (double z : {1.7, 2.4}) {
        Mat3 S = scattering_matrix(weak, z);
        cplx r = S(0, 1) / S(0, 0);
        // Born level: s12 ~ -r * s11 would flip the (1,2) sign; the frozen
        // convention keeps V12 = -r = -s12 + O(r^2).
        CHECK(std::abs(-r - (-S(0, 1))) < 5.0 * std::abs(r) * std::abs(r));
        CHECK(std::abs(std::conj(r) - std::conj(S(0, 1))) < 5.0 * std::abs(r) * std::abs(r));
    }
}
