#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "lienard/factorization.hpp"

namespace lienard {

/// A two-factor split of T(x) = (mu+1) G(x)/x into P(x) * Q(x); the search
/// ansatz is phi1 = a1 P, phi2 = Q / a1. Exponents listed in
/// free_f_exponents are treated as undetermined coefficients of F: the
/// search solves for a1 without them and reports the coefficient each one
/// would need as a Constraint on the returned pair.
struct SplitSpec {
    PowerExpr P;
    PowerExpr Q;
    std::vector<Rational> free_f_exponents;
    std::string name;
};

/// Enumerates the canonical splits for one- and two-term T = (mu+1) G/x:
///  - one term c x^e: symmetric-root split P = c x^{e/2}, Q = x^{e/2};
///  - two terms c1 x^{e1} + c2 x^{e2} with opposite signs:
///    binomial split sqrt(c1) x^{e1/2} (1 -+ b x^{d/2}) with b = sqrt(-c2/c1).
/// Throws SplitError when G vanishes; returns empty when no canonical shape
/// applies.
inline std::vector<SplitSpec> canonical_splits(const MixedLienardEquation& eq) {
    if (eq.G.is_zero())
        throw SplitError("split undefined: G = 0 has no factorable product (mu+1)G/x");
    const PowerExpr T = eq.G.shifted(Rational(-1)).scaled(eq.mu + 1.0);
    std::vector<SplitSpec> out;
    const auto& ts = T.terms();
    if (ts.size() == 1) {
        const Rational half = ts[0].exponent * Rational(1, 2);
        SplitSpec s;
        s.P = PowerExpr::monomial(ts[0].coeff, half);
        s.Q = PowerExpr::monomial(1.0, half);
        s.name = "symmetric-root";
        out.push_back(std::move(s));
    } else if (ts.size() == 2 && ts[0].coeff * ts[1].coeff < 0.0) {
        const double c1 = ts[0].coeff, c2 = ts[1].coeff;
        if (c1 > 0.0) {
            const double root_c1 = std::sqrt(c1);
            const double b = std::sqrt(-c2 / c1);
            const Rational e_half = ts[0].exponent * Rational(1, 2);
            const Rational d_half = (ts[1].exponent - ts[0].exponent) * Rational(1, 2);
            SplitSpec s;
            s.P = PowerExpr::monomial(root_c1, e_half) +
                  PowerExpr::monomial(-root_c1 * b, e_half + d_half);
            s.Q = PowerExpr::monomial(root_c1, e_half) +
                  PowerExpr::monomial(root_c1 * b, e_half + d_half);
            s.name = "binomial";
            out.push_back(std::move(s));
        }
    }
    return out;
}

/// Outcome of a factorization search. An empty pair list with a nonempty
/// violated_exponents list is the structured "no factorization under this
/// split" result: no real a1 satisfied those exponent classes.
struct FactorSearchResult {
    std::vector<FactorPair> pairs;
    std::vector<Rational> violated_exponents;
    SplitSpec split;
};

namespace detail {

struct ExponentClass {
    Rational e;
    double r = 0.0;   // coefficient stream from P + x P'/(mu+1)
    double f = 0.0;   // coefficient stream from F
    double q = 0.0;   // coefficient stream from Q
    bool f_free = false;
};

inline double class_residual(const ExponentClass& c, double a) {
    return c.r * a * a + c.f * a + c.q;
}

inline double class_scale(const ExponentClass& c, double a) {
    return std::max(1.0, std::abs(c.r) * a * a + std::abs(c.f) * std::abs(a) + std::abs(c.q));
}

} // namespace detail

/// Searches for factorizations of eq under the given split.
///
/// Substituting phi1 = a1 P, phi2 = Q/a1 into the first condition and
/// multiplying by a1 gives, per exponent class e,
///     r_e a1^2 + f_e a1 + q_e = 0
/// with r from R = P + x P'/(mu+1), f from F and q from Q. Each class is at
/// most quadratic in the single unknown a1; candidates are the real roots of
/// any nontrivial class, kept only if they satisfy every non-free class.
/// Classes at free F exponents instead produce a required-coefficient
/// Constraint per surviving root.
inline FactorSearchResult find_factorization(const MixedLienardEquation& eq,
                                             const SplitSpec& split,
                                             double coeff_tol = 1e-10) {
    if (eq.G.is_zero())
        throw SplitError("split undefined: G = 0");
    const PowerExpr T = eq.G.shifted(Rational(-1)).scaled(eq.mu + 1.0);
    const PowerExpr PQ = split.P * split.Q;
    if ((PQ - T).max_abs_coeff() > 1e-8 * std::max(1.0, T.max_abs_coeff()))
        throw SplitError("split precondition violated: P*Q != (mu+1)G/x for split '" +
                         split.name + "'");

    const double inv = 1.0 / (eq.mu + 1.0);
    const PowerExpr R = split.P + split.P.derivative().shifted(Rational(1)).scaled(inv);

    std::set<Rational> exps;
    for (const auto& t : R.terms()) exps.insert(t.exponent);
    for (const auto& t : eq.F.terms()) exps.insert(t.exponent);
    for (const auto& t : split.Q.terms()) exps.insert(t.exponent);

    std::vector<detail::ExponentClass> classes;
    for (const Rational& e : exps) {
        detail::ExponentClass c;
        c.e = e;
        c.r = R.coeff_at(e);
        c.f = eq.F.coeff_at(e);
        c.q = split.Q.coeff_at(e);
        c.f_free = std::find(split.free_f_exponents.begin(), split.free_f_exponents.end(), e) !=
                   split.free_f_exponents.end();
        classes.push_back(c);
    }

    // Candidate roots from each nontrivial non-free class.
    std::vector<double> candidates;
    for (const auto& c : classes) {
        if (c.f_free) continue;
        const bool has_r = std::abs(c.r) > coeff_tol;
        const bool has_f = std::abs(c.f) > coeff_tol;
        const bool has_q = std::abs(c.q) > coeff_tol;
        if (has_r) {
            const double disc = c.f * c.f - 4.0 * c.r * c.q;
            if (disc >= 0.0) {
                const double sq = std::sqrt(disc);
                candidates.push_back((-c.f + sq) / (2.0 * c.r));
                candidates.push_back((-c.f - sq) / (2.0 * c.r));
            }
        } else if (has_f) {
            candidates.push_back(-c.q / c.f);
        } else if (has_q) {
            // r = f = 0 but q != 0: unsatisfiable for any a1.
        }
    }

    FactorSearchResult result;
    result.split = split;

    std::vector<double> roots;
    for (double a : candidates) {
        if (std::abs(a) < coeff_tol) continue;
        bool ok = true;
        for (const auto& c : classes) {
            if (c.f_free) continue;
            if (std::abs(detail::class_residual(c, a)) > coeff_tol * detail::class_scale(c, a)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        bool dup = false;
        for (double r : roots)
            if (std::abs(r - a) <= 1e-9 * std::max(1.0, std::abs(r))) { dup = true; break; }
        if (!dup) roots.push_back(a);
    }

    if (roots.empty()) {
        for (const auto& c : classes)
            if (!c.f_free &&
                (std::abs(c.r) > coeff_tol || std::abs(c.f) > coeff_tol ||
                 std::abs(c.q) > coeff_tol))
                result.violated_exponents.push_back(c.e);
        return result;
    }

    std::sort(roots.begin(), roots.end(), std::greater<double>());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const double a = roots[i];
        FactorPair pair;
        pair.mu = eq.mu;
        pair.phi1 = split.P.scaled(a);
        pair.phi2 = split.Q.scaled(1.0 / a);
        pair.a1 = a;
        pair.branch = (roots.size() == 1) ? '+' : (i == 0 ? '+' : '-');
        for (const auto& c : classes) {
            if (!c.f_free) continue;
            Constraint con;
            con.exponent = c.e;
            con.required_coeff = -(c.r * a * a + c.q) / a;
            con.note = "F coefficient at x^(" + c.e.str() + ") forced by factorization";
            pair.constraints.push_back(con);
        }
        result.pairs.push_back(std::move(pair));
    }
    return result;
}

} // namespace lienard
