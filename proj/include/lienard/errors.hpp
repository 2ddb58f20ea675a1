#pragma once

#include <stdexcept>
#include <string>

namespace lienard {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the mathematical domain of an operation
/// (negative base with fractional exponent, radicand out of range, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// mu = -1 (or a parameter choice forcing it), which the x^{mu+1}
/// factorization cannot represent.
class DegeneracyError : public Error {
public:
    explicit DegeneracyError(const std::string& msg) : Error(msg) {}
};

/// A quadrature segment would cross an equilibrium (zero of x*phi1).
class EquilibriumCrossing : public Error {
public:
    EquilibriumCrossing(const std::string& msg, double root)
        : Error(msg), root(root) {}
    double root;
};

/// Requested output lies outside the attainable window of a monotone
/// solution segment. Carries the attainable bounds (+-inf when unbounded).
class AttainableRangeError : public Error {
public:
    AttainableRangeError(const std::string& msg, double t_min, double t_max)
        : Error(msg), t_min(t_min), t_max(t_max) {}
    double t_min;
    double t_max;
};

/// An evaluation grid touches or crosses a pole of the expression.
class PoleError : public Error {
public:
    PoleError(const std::string& msg, double pole_low, double pole_high)
        : Error(msg), pole_low(pole_low), pole_high(pole_high) {}
    double pole_low;
    double pole_high;
};

/// The a1 quadratic has no real root: no real factorization exists.
class NoRealFactorization : public Error {
public:
    explicit NoRealFactorization(const std::string& msg) : Error(msg) {}
};

/// A split spec cannot be formed (zero G, non-factorable shape, ...).
class SplitError : public Error {
public:
    explicit SplitError(const std::string& msg) : Error(msg) {}
};

/// Complex-pair expansion whose imaginary parts do not cancel.
class NonRealExpansion : public Error {
public:
    explicit NonRealExpansion(const std::string& msg) : Error(msg) {}
};

/// Series or adaptive scheme failed to reach the requested tolerance.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

/// Sample grid unusable for finite differences (too few points,
/// pathological spacing).
class GridError : public Error {
public:
    explicit GridError(const std::string& msg) : Error(msg) {}
};

} // namespace lienard
