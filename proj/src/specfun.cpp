#include "pvi/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace pvi {

namespace {

constexpr double PI = std::numbers::pi;

// Lanczos, g = 7, 9 coefficients.
constexpr std::array<double, 9> LANCZOS = {
    0.99999999999980993,     676.5203681218851,    -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool near_nonpositive_integer(cplx z, double eps) {
    const double n = std::round(z.real());
    return n <= 0.0 && std::abs(z - cplx(n, 0.0)) <= eps;
}

cplx gamma_positive_half(cplx z) {
    // valid for Re z >= 0.5
    cplx x = LANCZOS[0];
    for (int i = 1; i < 9; ++i) x += LANCZOS[i] / (z - 1.0 + double(i));
    const cplx tt = z + 6.5;
    return std::sqrt(2.0 * PI) * std::pow(tt, z - 0.5) * std::exp(-tt) * x;
}

bool near_integer(cplx z, double eps) {
    return std::abs(z - cplx(std::round(z.real()), 0.0)) <= eps;
}

} // namespace

cplx sinpi(cplx z) {
    const double m = std::round(z.real());
    const cplx w = z - m; // |Re w| <= 1/2, exact in double
    const cplx s = std::sin(PI * w);
    return (std::fmod(std::abs(m), 2.0) == 0.0) ? s : -s;
}

cplx gamma(cplx z) {
    if (near_nonpositive_integer(z, 1e-12))
        throw PoleError("gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return gamma_positive_half(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return PI / (sinpi(z) * gamma_positive_half(1.0 - z));
}

cplx rgamma(cplx z) {
    if (near_nonpositive_integer(z, 1e-12)) return 0.0;
    if (z.real() >= 0.5) return 1.0 / gamma_positive_half(z);
    return sinpi(z) * gamma_positive_half(1.0 - z) / PI;
}

namespace {

// Direct series, valid for |z| < 1 and used for |z| <= 0.6.
cplx series_2f1(cplx a, cplx b, cplx c, cplx z, const ToleranceConfig& tol) {
    cplx term = 1.0, sum = 1.0;
    int quiet = 0;
    for (int n = 0; n < tol.max_terms; ++n) {
        term *= (a + double(n)) * (b + double(n)) /
                ((c + double(n)) * double(n + 1)) * z;
        sum += term;
        if (std::abs(term) <= tol.rel_tol * std::abs(sum) + tol.abs_tol) {
            if (++quiet >= 2) return sum;
        } else {
            quiet = 0;
        }
    }
    throw NonConvergence("hyp2f1: series did not converge within max_terms");
}

double dist_to_singulars(cplx w) {
    return std::min(std::abs(w), std::abs(w - 1.0));
}

// Analytic continuation by recentred Taylor steps of the hypergeometric ODE
//   x(1-x) F'' + (c-(a+b+1)x) F' - ab F = 0
// along a polyline; carries (F, F') across each step.
struct TaylorMarcher {
    cplx a, b, c;
    cplx f, fp; // value and derivative at w
    cplx w;

    void step_to(cplx target) {
        const cplx p0 = w * (1.0 - w);
        const cplx p1 = 1.0 - 2.0 * w;
        const cplx q0 = c - (a + b + 1.0) * w;
        const cplx q1 = -(a + b + 1.0);
        const cplx r = -a * b;
        constexpr int ORDER = 40;
        std::array<cplx, ORDER + 1> fn{};
        fn[0] = f;
        fn[1] = fp;
        for (int n = 0; n + 2 <= ORDER; ++n) {
            // p2 = -1 multiplies n(n-1) f_n
            fn[n + 2] = -((p1 * double(n) + q0) * double(n + 1) * fn[n + 1] +
                          (-double(n) * double(n - 1) + q1 * double(n) + r) * fn[n]) /
                        (p0 * double(n + 2) * double(n + 1));
        }
        const cplx h = target - w;
        cplx v = 0.0, dv = 0.0;
        for (int n = ORDER; n >= 1; --n) {
            v = v * h + fn[n];
            dv = dv * h + double(n) * fn[n];
        }
        v = v * h + fn[0];
        f = v;
        fp = dv;
        w = target;
    }

    void march_to(cplx target) {
        while (std::abs(target - w) > 1e-15) {
            const double hmax = 0.35 * dist_to_singulars(w);
            const cplx d = target - w;
            const double L = std::abs(d);
            step_to(L <= hmax ? target : w + d * (hmax / L));
        }
    }
};

double segment_dist(cplx p, cplx q, cplx s) {
    // distance from point s to segment [p, q]
    const cplx d = q - p;
    const double L2 = std::norm(d);
    if (L2 == 0.0) return std::abs(s - p);
    double u = ((s - p) * std::conj(d)).real() / L2;
    u = std::clamp(u, 0.0, 1.0);
    return std::abs(s - (p + u * d));
}

cplx continue_2f1(cplx a, cplx b, cplx c, cplx z, const ToleranceConfig& tol) {
    const cplx z0 = 0.3 * z / std::abs(z);
    TaylorMarcher m{a, b, c, series_2f1(a, b, c, z0, tol),
                    a * b / c * series_2f1(a + 1.0, b + 1.0, c + 1.0, z0, tol),
                    z0};
    std::vector<cplx> waypoints;
    if (segment_dist(z0, z, 1.0) < 0.3) {
        // detour so the path never crosses the cut [1, oo)
        const double side = (z.imag() < 0.0) ? -1.0 : 1.0;
        waypoints.push_back(cplx(1.0, 0.5 * side));
    }
    waypoints.push_back(z);
    for (cplx wpt : waypoints) m.march_to(wpt);
    return m.f;
}

} // namespace

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z, const ToleranceConfig& tol) {
    if (near_nonpositive_integer(c, 1e-12))
        throw DegenerateParameters("hyp2f1: c is a non-positive integer");
    if (z == 0.0) return 1.0;
    if (std::abs(z) <= 0.6) return series_2f1(a, b, c, z, tol);

    const cplx zp = z / (z - 1.0);
    if (std::abs(zp) <= 0.6)
        return std::pow(1.0 - z, -a) * series_2f1(a, c - b, c, zp, tol);

    if (std::abs(1.0 - z) <= 0.6) {
        const cplx m = c - a - b;
        if (near_integer(m, 1e-9))
            throw DegenerateParameters(
                "hyp2f1: c-a-b integral, z->1-z connection unavailable");
        const cplx w = 1.0 - z;
        const cplx t1 = gamma(c) * gamma(m) * rgamma(c - a) * rgamma(c - b) *
                        series_2f1(a, b, 1.0 - m, w, tol);
        const cplx t2 = gamma(c) * gamma(-m) * rgamma(a) * rgamma(b) *
                        std::pow(w, m) * series_2f1(c - a, c - b, 1.0 + m, w, tol);
        return t1 + t2;
    }

    if (std::abs(z) >= 5.0 / 3.0) {
        const cplx d = a - b;
        if (near_integer(d, 1e-9))
            throw DegenerateParameters(
                "hyp2f1: a-b integral, z->1/z connection unavailable");
        const cplx iz = 1.0 / z;
        const cplx t1 = gamma(c) * gamma(-d) * rgamma(b) * rgamma(c - a) *
                        std::pow(-z, -a) *
                        series_2f1(a, 1.0 - c + a, 1.0 + d, iz, tol);
        const cplx t2 = gamma(c) * gamma(d) * rgamma(a) * rgamma(c - b) *
                        std::pow(-z, -b) *
                        series_2f1(b, 1.0 - c + b, 1.0 - d, iz, tol);
        return t1 + t2;
    }

    return continue_2f1(a, b, c, z, tol);
}

cplx hyp2f1_derivative(cplx a, cplx b, cplx c, cplx z,
                       const ToleranceConfig& tol) {
    if (a == 0.0 || b == 0.0) return 0.0;
    return a * b / c * hyp2f1(a + 1.0, b + 1.0, c + 1.0, z, tol);
}

} // namespace pvi
