#pragma once

#include <array>
#include <string>
#include <vector>

#include "pvi/pvi_core.hpp"

namespace pvi {

// Truncated Laurent expansion of a solution branch (y, z) around a fixed
// point of the time symmetry. Coefficient k of y_coeffs is the coefficient
// of (t - center)^{y_min_order + k}; orders above `truncation` are absent.
struct LaurentSeriesPair {
    cplx center;
    int y_min_order = 0;
    int z_min_order = 0;
    std::vector<cplx> y_coeffs;
    std::vector<cplx> z_coeffs;
    int truncation = 0;
    double trust_radius = 0.0;
    std::string branch;
};

enum class SymKind { sigma1, sigma2sigma1 };

// Moving-frame coordinates in which the symmetry acts linearly.
struct SymmetricFrame {
    SymKind kind;
    cplx tau;
    cplx lambda;
    cplx mu;
};

// Branch labels: "S2-1", "S2-2", "S2-3", "S2-4".
// Requires alpha3 == alpha4 (within 1e-12). Branches S2-3/S2-4 additionally
// need alpha1 != 0 and alpha2 != 0.
LaurentSeriesPair sigma1_series(const PviParams& params, const std::string& branch,
                                int truncation);

// Branch labels: "S3-1" .. "S3-6". Requires alpha1 == alpha3 == alpha4.
// Branches S3-3/S3-6 additionally need alpha0 != 0.
LaurentSeriesPair sigma2sigma1_series(const PviParams& params, const std::string& branch,
                                      int truncation);

// Horner evaluation at t. Throws OutOfTrustRadius unless
// 0 < |t - center| < trust_radius.
PhaseState evaluate(const LaurentSeriesPair& series, cplx t);

// (y, y', y'') at t from the termwise-differentiated series.
std::array<cplx, 3> evaluate_y_jet(const LaurentSeriesPair& series, cplx t);

// Worst functional-equation defect over `nsamples` points on the circle
// |t - center| = radius: y(m(t)) vs the symmetry image of y(t), likewise z,
// where m(t) = 1 - t for the sigma1 family and m(t) = 1/(1 - t) for the
// sigma2*sigma1 family (both circles are preserved by m).
double symmetry_residual(const LaurentSeriesPair& series, const PviParams& params,
                         double radius = 0.05, int nsamples = 8);

SymmetricFrame to_symmetric_frame(SymKind kind, const PviParams& params,
                                  const PhaseState& s);
PhaseState from_symmetric_frame(SymKind kind, const PviParams& params,
                                const SymmetricFrame& f);

// Hamiltonian generating the reduced flow in frame coordinates.
cplx k_hamiltonian(SymKind kind, const PviParams& params, const SymmetricFrame& f);

// Residual of the second-order scalar equation satisfied by lambda(tau) in
// the sigma2*sigma1 frame; lambda_jet = {lambda, lambda', lambda''}.
cplx lambda_ode_residual(const PviParams& params, cplx tau,
                         const std::array<cplx, 3>& lambda_jet);

// Frame-coordinate expansion of a branch: lambda and mu as Laurent series in
// tau. *_max_order is the highest order the construction certifies; for the
// sigma2*sigma1 family these series are supported on orders == 1 (mod 3) for
// lambda and == 2 (mod 3) for mu, and for the sigma1 family on odd orders.
struct FrameSeries {
    SymKind kind;
    int lambda_min_order = 0;
    int lambda_max_order = 0;
    std::vector<cplx> lambda_coeffs;
    int mu_min_order = 0;
    int mu_max_order = 0;
    std::vector<cplx> mu_coeffs;
};

FrameSeries frame_series(const LaurentSeriesPair& series, const PviParams& params);

} // namespace pvi
