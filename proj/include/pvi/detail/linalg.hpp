#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "pvi/errors.hpp"

namespace pvi::detail {

// Row-major 2x2 complex matrix. Small enough that everything stays inline.
struct Mat2 {
    cplx a{0.0}, b{0.0}, c{0.0}, d{0.0}; // [[a,b],[c,d]]

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 diag(cplx p, cplx q) { return {p, 0.0, 0.0, q}; }

    cplx det() const { return a * d - b * c; }
    cplx trace() const { return a + d; }

    Mat2 inverse() const {
        const cplx dt = det();
        if (std::abs(dt) < 1e-250)
            throw SingularConfiguration("Mat2::inverse: singular matrix");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    friend Mat2 operator*(const Mat2& L, const Mat2& R) {
        return {L.a * R.a + L.b * R.c, L.a * R.b + L.b * R.d,
                L.c * R.a + L.d * R.c, L.c * R.b + L.d * R.d};
    }
    friend Mat2 operator*(cplx s, const Mat2& M) {
        return {s * M.a, s * M.b, s * M.c, s * M.d};
    }
    friend Mat2 operator-(const Mat2& L, const Mat2& R) {
        return {L.a - R.a, L.b - R.b, L.c - R.c, L.d - R.d};
    }
    friend Mat2 operator+(const Mat2& L, const Mat2& R) {
        return {L.a + R.a, L.b + R.b, L.c + R.c, L.d + R.d};
    }

    // max-abs entry norm; enough for tolerance checks
    double norm() const {
        return std::max(std::max(std::abs(a), std::abs(b)),
                        std::max(std::abs(c), std::abs(d)));
    }
};

inline double dist(const Mat2& L, const Mat2& R) { return (L - R).norm(); }

// Solve M X = N for X (change of basis between fundamental solution frames).
inline Mat2 solve(const Mat2& M, const Mat2& N) { return M.inverse() * N; }

} // namespace pvi::detail
