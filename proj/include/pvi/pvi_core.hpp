#pragma once

#include <array>
#include <utility>
#include <vector>

#include "pvi/errors.hpp"
#include "pvi/specfun.hpp"

namespace pvi {

// primitive cube root of unity, e^{2 pi i / 3}
inline const cplx OMEGA = cplx(-0.5, 0.8660254037844386);

struct PviParams {
    cplx alpha0, alpha1, alpha2, alpha3, alpha4;

    // classical coefficients of the second-order scalar form
    cplx alpha() const { return alpha1 * alpha1 / 2.0; }
    cplx beta() const { return -alpha4 * alpha4 / 2.0; }
    cplx gamma_() const { return alpha3 * alpha3 / 2.0; }
    cplx delta() const { return (1.0 - alpha0 * alpha0) / 2.0; }

    // alpha0 + alpha1 + 2 alpha2 + alpha3 + alpha4 - 1
    cplx affine_defect() const {
        return alpha0 + alpha1 + 2.0 * alpha2 + alpha3 + alpha4 - 1.0;
    }
};

struct PhaseState {
    cplx y, z, t;
};

struct ComplexPath {
    std::vector<cplx> vertices;
    double min_clearance = 1e-3;
};

// branch_signs order: (alpha1, alpha4, alpha3, alpha0)
PviParams params_from_classical(cplx alpha, cplx beta, cplx gamma_, cplx delta,
                                std::array<int, 4> branch_signs = {1, 1, 1, 1});

// parameter points on the two symmetry strata; alpha2 solved from the
// affine relation
PviParams sigma1_params(cplx a0, cplx a1, cplx a34);
PviParams sigma2sigma1_params(cplx a0, cplx a134);

std::pair<cplx, cplx> vector_field(const PviParams& params, const PhaseState& s);

cplx hamiltonian(const PviParams& params, const PhaseState& s);

cplx pvi_residual(const PviParams& params, cplx t, cplx y, cplx y_prime,
                  cplx y_double_prime);

std::vector<PhaseState> integrate(const PviParams& params, const PhaseState& s0,
                                  const ComplexPath& path,
                                  const ToleranceConfig& tol = {},
                                  double blowup_threshold = 1e8);

// dz/dt on the invariant line y = t of the alpha0 = 0 stratum
cplx riccati_vector_field(const PviParams& params, cplx z, cplx t);

PhaseState riccati_closed_form_sigma1(const PviParams& params, cplx t,
                                      const ToleranceConfig& tol = {});

PhaseState riccati_closed_form_sigma2sigma1(const PviParams& params, cplx t,
                                            const ToleranceConfig& tol = {});

} // namespace pvi
