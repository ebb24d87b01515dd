#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace pvi {

using cplx = std::complex<double>;

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// gamma(z) at (or within 1e-12 of) a non-positive integer.
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// A continuation formula needs a Gamma quotient whose argument is an
// integer (c-a-b or a-b integral): outside the supported generic domain.
struct DegenerateParameters : Error {
    explicit DegenerateParameters(const std::string& msg) : Error(msg) {}
};

struct NonConvergence : Error {
    explicit NonConvergence(const std::string& msg) : Error(msg) {}
};

// Equation coefficients blow up: t in {0,1}.
struct SingularTime : Error {
    explicit SingularTime(const std::string& msg) : Error(msg) {}
};

// y in {0,1,t} (or the symmetric-frame equivalent), where the residual or
// frame formulas divide by zero.
struct SingularConfiguration : Error {
    explicit SingularConfiguration(const std::string& msg) : Error(msg) {}
};

// Trajectory left the configured blow-up threshold; carries the parameter
// value along the path where it happened.
struct PoleEncountered : Error {
    cplx where;
    PoleEncountered(const std::string& msg, cplx w) : Error(msg), where(w) {}
};

// Operation only defined on a parameter stratum (alpha0 = 0, alpha3 = alpha4, ...).
struct WrongParameterStratum : Error {
    explicit WrongParameterStratum(const std::string& msg) : Error(msg) {}
};

// Reserved: params_from_classical cannot actually fail (alpha2 always solvable).
struct InconsistentSigns : Error {
    explicit InconsistentSigns(const std::string& msg) : Error(msg) {}
};

// Backlund action at a point of its excluded set (vanishing denominator).
struct IndeterminateAction : Error {
    explicit IndeterminateAction(const std::string& msg) : Error(msg) {}
};

// Series recursion hit a singular linear solve at order k (resonance).
struct NonGenericParameters : Error {
    int order;
    NonGenericParameters(const std::string& msg, int k) : Error(msg), order(k) {}
};

// evaluate() called outside the series trust radius.
struct OutOfTrustRadius : Error {
    explicit OutOfTrustRadius(const std::string& msg) : Error(msg) {}
};

// Frame map undefined at this phase point.
struct IndeterminateFrame : Error {
    explicit IndeterminateFrame(const std::string& msg) : Error(msg) {}
};

// K-Hamiltonian denominator vanishes (tau^2 = 1/4 resp. tau^3 = -1).
struct SingularTau : Error {
    explicit SingularTau(const std::string& msg) : Error(msg) {}
};

// Linearization coefficients evaluated at a singular x; message names which.
struct SingularPoint : Error {
    explicit SingularPoint(const std::string& msg) : Error(msg) {}
};

// Transport polyline passes too close to a singular point of the ODE.
struct PoleTooClose : Error {
    explicit PoleTooClose(const std::string& msg) : Error(msg) {}
};

struct GaugeMismatch : Error {
    explicit GaugeMismatch(const std::string& msg) : Error(msg) {}
};

struct NotUnimodular : Error {
    explicit NotUnimodular(const std::string& msg) : Error(msg) {}
};

} // namespace pvi
