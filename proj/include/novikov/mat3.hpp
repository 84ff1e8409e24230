#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <ostream>

#include "novikov/errors.hpp"

namespace novikov {

using cplx = std::complex<double>;

// Small dense complex 3x3 matrix. Row-major, value semantics.
struct Mat3 {
    std::array<cplx, 9> a{};

    static Mat3 identity() {
        Mat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
        return m;
    }
    static Mat3 zero() { return Mat3{}; }

    // Matrix unit E_{ij} (1-based indices, matching the usual notation).
    static Mat3 unit(int i, int j, cplx v = 1.0) {
        Mat3 m;
        m(i - 1, j - 1) = v;
        return m;
    }

    static Mat3 diag(cplx d0, cplx d1, cplx d2) {
        Mat3 m;
        m(0, 0) = d0;
        m(1, 1) = d1;
        m(2, 2) = d2;
        return m;
    }

    cplx& operator()(int r, int c) { return a[static_cast<size_t>(3 * r + c)]; }
    const cplx& operator()(int r, int c) const { return a[static_cast<size_t>(3 * r + c)]; }

    Mat3 operator+(const Mat3& o) const {
        Mat3 m;
        for (int i = 0; i < 9; ++i) m.a[i] = a[i] + o.a[i];
        return m;
    }
    Mat3 operator-(const Mat3& o) const {
        Mat3 m;
        for (int i = 0; i < 9; ++i) m.a[i] = a[i] - o.a[i];
        return m;
    }
    Mat3 operator*(const Mat3& o) const {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                cplx s = 0.0;
                for (int k = 0; k < 3; ++k) s += (*this)(r, k) * o(k, c);
                m(r, c) = s;
            }
        return m;
    }
    Mat3 operator*(cplx s) const {
        Mat3 m;
        for (int i = 0; i < 9; ++i) m.a[i] = a[i] * s;
        return m;
    }
    Mat3& operator+=(const Mat3& o) {
        for (int i = 0; i < 9; ++i) a[i] += o.a[i];
        return *this;
    }

    Mat3 conj() const {
        Mat3 m;
        for (int i = 0; i < 9; ++i) m.a[i] = std::conj(a[i]);
        return m;
    }
    Mat3 transpose() const {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m(r, c) = (*this)(c, r);
        return m;
    }

    cplx det() const {
        const Mat3& m = *this;
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }

    Mat3 inverse() const {
        cplx d = det();
        if (std::abs(d) < 1e-300) throw numerical_error("Mat3::inverse: singular matrix");
        const Mat3& m = *this;
        Mat3 r;
        r(0, 0) = (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) / d;
        r(0, 1) = (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2)) / d;
        r(0, 2) = (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1)) / d;
        r(1, 0) = (m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2)) / d;
        r(1, 1) = (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) / d;
        r(1, 2) = (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2)) / d;
        r(2, 0) = (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)) / d;
        r(2, 1) = (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1)) / d;
        r(2, 2) = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / d;
        return r;
    }

    double norm_max() const {
        double n = 0.0;
        for (const auto& v : a) n = std::max(n, std::abs(v));
        return n;
    }

    // Sum of the entries of column c (0-based).
    cplx column_sum(int c) const { return (*this)(0, c) + (*this)(1, c) + (*this)(2, c); }
};

inline Mat3 operator*(cplx s, const Mat3& m) { return m * s; }

inline std::ostream& operator<<(std::ostream& os, const Mat3& m) {
    for (int r = 0; r < 3; ++r) {
        os << "[ ";
        for (int c = 0; c < 3; ++c) os << m(r, c) << " ";
        os << "]\n";
    }
    return os;
}

// Permutation symmetries of the 3x3 Lax pair.
inline const Mat3& gamma1() {
    static const Mat3 g = [] {
        Mat3 m;
        m(0, 1) = m(1, 0) = m(2, 2) = 1.0;
        return m;
    }();
    return g;
}
inline const Mat3& gamma2() {
    static const Mat3 g = [] {
        Mat3 m;
        m(0, 2) = m(1, 1) = m(2, 0) = 1.0;
        return m;
    }();
    return g;
}
inline const Mat3& gamma3() {
    static const Mat3 g = [] {
        Mat3 m;
        m(0, 0) = m(1, 2) = m(2, 1) = 1.0;
        return m;
    }();
    return g;
}
// Cyclic permutation C with C^3 = I; mu(omega z) = C^{-1} mu(z) C.
inline const Mat3& cyc() {
    static const Mat3 c = [] {
        Mat3 m;
        m(0, 2) = m(1, 0) = m(2, 1) = 1.0;
        return m;
    }();
    return c;
}

} // namespace novikov
