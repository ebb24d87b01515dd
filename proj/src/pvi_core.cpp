#include "pvi/pvi_core.hpp"

#include <algorithm>
#include <cmath>

#include "pvi/detail/rk45.hpp"

namespace pvi {

namespace {

void require_regular_time(cplx t) {
    if (std::abs(t) < 1e-13 || std::abs(t - 1.0) < 1e-13)
        throw SingularTime("t at a fixed singular point {0, 1}");
}

double seg_dist(cplx p, cplx q, cplx s) {
    const cplx d = q - p;
    const double L2 = std::norm(d);
    if (L2 == 0.0) return std::abs(s - p);
    const double u = std::clamp(((s - p) * std::conj(d)).real() / L2, 0.0, 1.0);
    return std::abs(s - (p + u * d));
}

} // namespace

PviParams params_from_classical(cplx alpha, cplx beta, cplx gamma_, cplx delta,
                                std::array<int, 4> branch_signs) {
    PviParams p;
    p.alpha1 = double(branch_signs[0]) * std::sqrt(2.0 * alpha);
    p.alpha4 = double(branch_signs[1]) * std::sqrt(-2.0 * beta);
    p.alpha3 = double(branch_signs[2]) * std::sqrt(2.0 * gamma_);
    p.alpha0 = double(branch_signs[3]) * std::sqrt(1.0 - 2.0 * delta);
    p.alpha2 = (1.0 - p.alpha0 - p.alpha1 - p.alpha3 - p.alpha4) / 2.0;
    return p;
}

PviParams sigma1_params(cplx a0, cplx a1, cplx a34) {
    return {a0, a1, (1.0 - a0 - a1 - 2.0 * a34) / 2.0, a34, a34};
}

PviParams sigma2sigma1_params(cplx a0, cplx a134) {
    return {a0, a134, (1.0 - a0 - 3.0 * a134) / 2.0, a134, a134};
}

std::pair<cplx, cplx> vector_field(const PviParams& params, const PhaseState& s) {
    require_regular_time(s.t);
    const cplx y = s.y, z = s.z, t = s.t;
    const cplx tt = t * (t - 1.0);
    const cplx G = 2.0 * y * (y - 1.0) * (y - t) * z -
                   (params.alpha0 - 1.0) * y * (y - 1.0) -
                   params.alpha3 * y * (y - t) -
                   params.alpha4 * (y - 1.0) * (y - t);
    const cplx S =
        y * (y - 1.0) + (y - 1.0) * (y - t) + y * (y - t);
    const cplx W = (2.0 * y - 1.0) * (params.alpha0 - 1.0) +
                   (2.0 * y - t) * params.alpha3 +
                   (2.0 * y - t - 1.0) * params.alpha4;
    const cplx H = -S * z * z + W * z -
                   (params.alpha1 + params.alpha2) * params.alpha2;
    return {G / tt, H / tt};
}

cplx hamiltonian(const PviParams& params, const PhaseState& s) {
    require_regular_time(s.t);
    const cplx y = s.y, z = s.z, t = s.t;
    const cplx num =
        y * (y - 1.0) * (y - t) * z * z -
        (params.alpha4 * (y - 1.0) * (y - t) + params.alpha3 * y * (y - t) +
         (params.alpha0 - 1.0) * y * (y - 1.0)) *
            z +
        params.alpha2 * (params.alpha1 + params.alpha2) * (y - t);
    return num / (t * (t - 1.0));
}

cplx pvi_residual(const PviParams& params, cplx t, cplx y, cplx y_prime,
                  cplx y_double_prime) {
    require_regular_time(t);
    const double scale = std::max(1.0, std::abs(t));
    if (std::abs(y) < 1e-12 || std::abs(y - 1.0) < 1e-12)
        throw SingularConfiguration("pvi_residual: y at a fixed singular point");
    const cplx A = params.alpha(), B = params.beta(), C = params.gamma_(),
               D = params.delta();
    if (std::abs(y - t) <= 1e-12 * scale) {
        // simple pole in (y - t); finite only when the jet kills it
        const cplx pole_coef = 0.5 * y_prime * y_prime - y_prime + D;
        if (std::abs(pole_coef) > 1e-8)
            throw SingularConfiguration("pvi_residual: y = t and jet not tangent");
        const cplx st = 1.0 / t + 1.0 / (t - 1.0);
        return y_double_prime -
               (0.5 * st * y_prime * y_prime - st * y_prime +
                D * (2.0 * t - 1.0) / (t * (t - 1.0)));
    }
    const cplx rhs =
        0.5 * (1.0 / y + 1.0 / (y - 1.0) + 1.0 / (y - t)) * y_prime * y_prime -
        (1.0 / t + 1.0 / (t - 1.0) + 1.0 / (y - t)) * y_prime +
        y * (y - 1.0) * (y - t) / (t * t * (t - 1.0) * (t - 1.0)) *
            (A + B * t / (y * y) + C * (t - 1.0) / ((y - 1.0) * (y - 1.0)) +
             D * t * (t - 1.0) / ((y - t) * (y - t)));
    return y_double_prime - rhs;
}

std::vector<PhaseState> integrate(const PviParams& params, const PhaseState& s0,
                                  const ComplexPath& path,
                                  const ToleranceConfig& tol,
                                  double blowup_threshold) {
    if (path.vertices.empty()) return {s0};
    if (std::abs(s0.t - path.vertices.front()) > 1e-12)
        throw SingularTime("integrate: s0.t does not match the first vertex");
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        for (cplx ex : {cplx(0.0), cplx(1.0)}) {
            if (seg_dist(path.vertices[i], path.vertices[i + 1], ex) <
                path.min_clearance)
                throw SingularTime("integrate: path too close to t in {0,1}");
        }
    }
    require_regular_time(s0.t);

    auto f = [&](cplx t, const std::array<cplx, 2>& v, std::array<cplx, 2>& dv) {
        auto [dy, dz] = vector_field(params, PhaseState{v[0], v[1], t});
        dv[0] = dy;
        dv[1] = dz;
    };
    auto guard = [&](const cplx& t, const std::array<cplx, 2>& v) {
        if (std::abs(v[0]) > blowup_threshold || std::abs(v[1]) > blowup_threshold)
            throw PoleEncountered("integrate: trajectory blow-up (movable pole)", t);
    };

    std::vector<PhaseState> out;
    out.push_back(s0);
    std::array<cplx, 2> state = {s0.y, s0.z};
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        state = detail::rk45_segment<2>(f, path.vertices[i], path.vertices[i + 1],
                                        state, tol.rel_tol, tol.abs_tol, guard);
        out.push_back(PhaseState{state[0], state[1], path.vertices[i + 1]});
    }
    return out;
}

cplx riccati_vector_field(const PviParams& params, cplx z, cplx t) {
    if (std::abs(params.alpha0) > 1e-12)
        throw WrongParameterStratum("riccati_vector_field: alpha0 must vanish");
    require_regular_time(t);
    const cplx tt = t * (t - 1.0);
    const cplx num = -tt * z * z +
                     (1.0 - 2.0 * t + params.alpha3 * t +
                      params.alpha4 * (t - 1.0)) *
                         z -
                     (params.alpha1 + params.alpha2) * params.alpha2;
    return num / tt;
}

PhaseState riccati_closed_form_sigma1(const PviParams& params, cplx t,
                                      const ToleranceConfig& tol) {
    if (std::abs(params.alpha0) > 1e-12 ||
        std::abs(params.alpha3 - params.alpha4) > 1e-12)
        throw WrongParameterStratum(
            "riccati_closed_form_sigma1: needs alpha0 = 0, alpha3 = alpha4");
    const cplx xi = 4.0 * (t - 0.5) * (t - 0.5);
    const cplx a = params.alpha2 / 2.0;
    const cplx b = (params.alpha1 + params.alpha2) / 2.0;
    const cplx F = hyp2f1(a, b, 0.5, xi, tol);
    const cplx dF = hyp2f1_derivative(a, b, 0.5, xi, tol);
    const cplx z = dF / F * 8.0 * (t - 0.5);
    return {t, z, t};
}

PhaseState riccati_closed_form_sigma2sigma1(const PviParams& params, cplx t,
                                            const ToleranceConfig& tol) {
    if (std::abs(params.alpha0) > 1e-12 ||
        std::abs(params.alpha1 - params.alpha3) > 1e-12 ||
        std::abs(params.alpha3 - params.alpha4) > 1e-12)
        throw WrongParameterStratum(
            "riccati_closed_form_sigma2sigma1: needs alpha0 = 0, alpha1 = alpha3 = alpha4");
    const cplx w = OMEGA;
    const cplx a1 = params.alpha1;
    const cplx tau = (-w * t - 1.0) / (t + w);
    const cplx dtau = (1.0 - w * w) / ((t + w) * (t + w));
    const cplx a = (1.0 + a1) / 2.0;
    const cplx b = (1.0 + 3.0 * a1) / 6.0;
    const cplx arg = -tau * tau * tau;
    const cplx F = hyp2f1(a, b, 2.0 / 3.0, arg, tol);
    const cplx dF = hyp2f1_derivative(a, b, 2.0 / 3.0, arg, tol);
    // rational offset, with the common (t + omega^2) factor divided out so
    // the fixed point t = -omega^2 stays finite
    const cplx offset = (t * (1.0 - t) +
                         (t * t + (3.0 * w - w * w) * t - 2.0 * w) * a1) /
                        (2.0 * t * (t - 1.0) * (t + w));
    const cplx z = dF / F * (-3.0 * tau * tau) * dtau + offset;
    return {t, z, t};
}

} // namespace pvi
