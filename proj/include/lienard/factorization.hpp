#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "lienard/equation.hpp"
#include "lienard/power_expr.hpp"

namespace lienard {

/// A model restriction discovered while matching coefficients: the equation
/// admits the factorization only if the coefficient of F at `exponent`
/// equals `required_coeff`.
struct Constraint {
    Rational exponent;
    double required_coeff = 0.0;
    std::string note;
};

/// One factorization (D - phi2)(D - phi1) x^{mu+1} = 0.
///
/// a1 is the free split constant when the pair came out of a coefficient
/// search; hand-built pairs leave it empty. branch tags the quadratic root
/// ('+' / '-').
template <class Coeff>
struct BasicFactorPair {
    double mu = 0.0;
    BasicPowerExpr<Coeff> phi1;
    BasicPowerExpr<Coeff> phi2;
    std::optional<double> a1;
    char branch = 0;
    std::vector<Constraint> constraints;

    bool valid() const {
        return std::abs(mu + 1.0) >= 1e-12 && !phi1.is_zero() && !phi2.is_zero();
    }
};

using FactorPair = BasicFactorPair<double>;
using ComplexFactorPair = BasicFactorPair<std::complex<double>>;

/// Expands (D - phi2)(D - phi1) x^{mu+1} = 0 into the mixed Lienard form:
///     F = -(phi1 + phi2 + x phi1' / (mu+1)),   G = x phi1 phi2 / (mu+1).
inline MixedLienardEquation expand_factorization(const FactorPair& pair) {
    const double inv = 1.0 / (pair.mu + 1.0);
    PowerExpr f = -(pair.phi1 + pair.phi2 +
                    pair.phi1.derivative().shifted(Rational(1)).scaled(inv));
    PowerExpr g = (pair.phi1 * pair.phi2).shifted(Rational(1)).scaled(inv);
    return MixedLienardEquation(pair.mu, std::move(f), std::move(g));
}

/// Complex-pair overload: the expansion must come out real (imaginary
/// coefficients cancelling below imag_tol), as in conjugate shift pairs.
inline MixedLienardEquation expand_factorization(const ComplexFactorPair& pair,
                                                 double imag_tol = 1e-12) {
    const std::complex<double> inv(1.0 / (pair.mu + 1.0), 0.0);
    ComplexPowerExpr f = -(pair.phi1 + pair.phi2 +
                           pair.phi1.derivative().shifted(Rational(1)).scaled(inv));
    ComplexPowerExpr g = (pair.phi1 * pair.phi2).shifted(Rational(1)).scaled(inv);
    return MixedLienardEquation(pair.mu, to_real(f, imag_tol), to_real(g, imag_tol));
}

/// Residuals of the two factorization conditions for a candidate pair
/// against a target equation. Failing is a report, not an error.
struct ConditionReport {
    PowerExpr residual1;   // phi1 + phi2 + x phi1'/(mu+1) + F
    PowerExpr residual2;   // phi1 phi2 - (mu+1) G / x
    double max_abs_coeff = 0.0;
    bool pass = false;
    double tol = 0.0;
};

inline ConditionReport check_conditions(const FactorPair& pair,
                                        const MixedLienardEquation& eq,
                                        double tol = 1e-10) {
    const double inv = 1.0 / (pair.mu + 1.0);
    ConditionReport rep;
    rep.residual1 = pair.phi1 + pair.phi2 +
                    pair.phi1.derivative().shifted(Rational(1)).scaled(inv) + eq.F;
    rep.residual2 = pair.phi1 * pair.phi2 -
                    eq.G.shifted(Rational(-1)).scaled(pair.mu + 1.0);
    rep.max_abs_coeff = std::max(rep.residual1.max_abs_coeff(),
                                 rep.residual2.max_abs_coeff());
    rep.tol = tol;
    rep.pass = rep.max_abs_coeff < tol;
    return rep;
}

/// Checks a mu = 0 pair against the standard (non-parametric) factorization
/// conditions  phi1 + phi2 + q phi1' = -f,  phi1 phi2 = g/q.
/// Kept as its own code path so the mu -> 0 coincidence is a measured fact.
inline ConditionReport reduce_to_standard(const FactorPair& pair,
                                          const MixedLienardEquation& eq,
                                          double tol = 1e-10) {
    if (pair.mu != 0.0)
        throw DomainError("reduce_to_standard requires mu = 0, got mu = " +
                          std::to_string(pair.mu));
    ConditionReport rep;
    rep.residual1 = pair.phi1 + pair.phi2 +
                    pair.phi1.derivative().shifted(Rational(1)) + eq.F;
    rep.residual2 = pair.phi1 * pair.phi2 - eq.G.shifted(Rational(-1));
    rep.max_abs_coeff = std::max(rep.residual1.max_abs_coeff(),
                                 rep.residual2.max_abs_coeff());
    rep.tol = tol;
    rep.pass = rep.max_abs_coeff < tol;
    return rep;
}

} // namespace lienard
