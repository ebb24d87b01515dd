#pragma once

#include <complex>

#include "pvi/errors.hpp"

namespace pvi {

struct ToleranceConfig {
    double rel_tol = 1e-13;
    double abs_tol = 1e-15;
    int max_terms = 4000;
};

// Complex Gamma. Relative error <= 1e-12 for |z| <= 50 away from poles.
cplx gamma(cplx z);

// 1/Gamma(z); entire, returns 0 at the poles of Gamma. Used by connection
// formulas whose denominators may sit exactly on a pole.
cplx rgamma(cplx z);

// sin(pi z) with argument reduction; relatively accurate near real integers
// where sin(pi*z) evaluated directly loses all significant digits.
cplx sinpi(cplx z);

// Principal-branch Gauss hypergeometric function. Branch cut [1, oo),
// continuous from above. Generic parameters only: connection formulas with
// integral c-a-b or a-b are refused (DegenerateParameters).
cplx hyp2f1(cplx a, cplx b, cplx c, cplx z, const ToleranceConfig& tol = {});

// d/dz of the above via the contiguous relation (ab/c) 2F1(a+1,b+1;c+1;z).
cplx hyp2f1_derivative(cplx a, cplx b, cplx c, cplx z,
                       const ToleranceConfig& tol = {});

} // namespace pvi
