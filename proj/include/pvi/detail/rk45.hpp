#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "pvi/errors.hpp"

namespace pvi::detail {

// Dormand-Prince 5(4) over a fixed-size complex state, marched along a
// straight segment z0 -> z1 in the complex plane. The derivative callback is
// f(z, y, dy); the observer (if any) sees every accepted step and may throw.
//
// PI step control: factor = 0.9 * err^(-0.7/5) * err_prev^(0.4/5), clamped
// to [0.2, 5.0]; a step is accepted when the mixed-tolerance error measure
// is <= 1.

struct NullObserver {
    template <class S> void operator()(const std::complex<double>&, const S&) const {}
};

template <std::size_t N, class F, class Obs = NullObserver>
std::array<std::complex<double>, N>
rk45_segment(F&& f, std::complex<double> z0, std::complex<double> z1,
             std::array<std::complex<double>, N> y,
             double rtol, double atol, Obs&& obs = Obs{}, int max_steps = 400000) {
    using C = std::complex<double>;
    using S = std::array<C, N>;
    const C dz = z1 - z0;
    const double len = std::abs(dz);
    if (len == 0.0) return y;

    auto deriv = [&](double u, const S& v, S& out) {
        S raw;
        f(z0 + u * dz, v, raw);
        for (std::size_t i = 0; i < N; ++i) out[i] = dz * raw[i];
    };

    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                     a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                     a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                     a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                     b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                     e3 = 500.0 / 1113 - 7571.0 / 16695,
                     e4 = 125.0 / 192 - 393.0 / 640,
                     e5 = -2187.0 / 6784 + 92097.0 / 339200,
                     e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    double u = 0.0;
    double h = std::min(0.1, 1.0 / std::max(1.0, len));
    double err_prev = 1.0;
    S k1, k2, k3, k4, k5, k6, k7, tmp, ynew;
    deriv(u, y, k1);

    for (int step = 0; step < max_steps; ++step) {
        if (u >= 1.0) return y;
        h = std::min(h, 1.0 - u);
        if (h < 1e-14)
            throw NonConvergence("rk45: step size underflow along segment");

        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a21 * k1[i]);
        deriv(u + h / 5, tmp, k2);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        deriv(u + 3 * h / 10, tmp, k3);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        deriv(u + 4 * h / 5, tmp, k4);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        deriv(u + 8 * h / 9, tmp, k5);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                 a64 * k4[i] + a65 * k5[i]);
        deriv(u + h, tmp, k6);
        for (std::size_t i = 0; i < N; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                                  b5 * k5[i] + b6 * k6[i]);
        deriv(u + h, ynew, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const C E = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                             e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc =
                atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err = std::max(err, std::abs(E) / sc);
        }

        if (err <= 1.0) {
            u += h;
            y = ynew;
            k1 = k7; // FSAL
            obs(z0 + u * dz, y);
            const double fac = 0.9 * std::pow(std::max(err, 1e-16), -0.7 / 5.0) *
                               std::pow(err_prev, 0.4 / 5.0);
            err_prev = std::max(err, 1e-16);
            h *= std::clamp(fac, 0.2, 5.0);
        } else {
            h *= std::clamp(0.9 * std::pow(err, -1.0 / 5.0), 0.2, 1.0);
        }
    }
    throw NonConvergence("rk45: max step count exceeded along segment");
}

} // namespace pvi::detail
