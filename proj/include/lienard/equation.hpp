#pragma once

#include <cmath>
#include <string>

#include "lienard/errors.hpp"
#include "lienard/power_expr.hpp"

namespace lienard {

/// Mixed quadratic-linear Lienard equation
///     x'' + mu * x'^2 / x + F(x) x' + G(x) = 0
/// on the positive half axis. mu = -1 is excluded: the factorization
/// variable x^{mu+1} would degenerate.
struct MixedLienardEquation {
    double mu = 0.0;
    PowerExpr F;
    PowerExpr G;

    MixedLienardEquation() = default;
    MixedLienardEquation(double mu_, PowerExpr F_, PowerExpr G_)
        : mu(mu_), F(std::move(F_)), G(std::move(G_)) {
        if (std::abs(mu + 1.0) < 1e-12)
            throw DegeneracyError("mu = -1 not representable by the x^{mu+1} factorization");
    }

    std::string str() const {
        return "x'' + (" + std::to_string(mu) + ") x'^2/x + [" + F.str() +
               "] x' + [" + G.str() + "] = 0";
    }
};

} // namespace lienard
