#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <limits>

#include "lienard/errors.hpp"

namespace lienard {

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
inline constexpr std::array<double, 8> kron_nodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr std::array<double, 8> kron_weights = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
inline void gk15(const F& f, double a, double b, double& value, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fc = f(c);
    double resk = kron_weights[7] * fc;
    double resg = gauss_weights[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kron_nodes[j];
        const double f1 = f(c - x);
        const double f2 = f(c + x);
        resk += kron_weights[j] * (f1 + f2);
        if (j % 2 == 1) resg += gauss_weights[j / 2] * (f1 + f2);
    }
    value = resk * h;
    err = std::abs((resk - resg) * h);
}

} // namespace detail

/// Adaptive Gauss-Kronrod quadrature of f over [a, b] (a may exceed b).
/// Local bisection until the error estimate meets rel_tol against the
/// accumulated value (plus a small absolute floor).
template <class F>
double integrate_adaptive(const F& f, double a, double b, double rel_tol = 1e-10,
                          double abs_tol = 1e-14, int max_depth = 52) {
    if (a == b) return 0.0;
    double total = 0.0;

    std::function<void(double, double, int)> recurse = [&](double lo, double hi, int depth) {
        double v, e;
        detail::gk15(f, lo, hi, v, e);
        if (!std::isfinite(v))
            throw ConvergenceError("quadrature: non-finite integrand value");
        if (e <= abs_tol + rel_tol * std::abs(v) || depth >= max_depth) {
            if (depth >= max_depth && e > 1e3 * (abs_tol + rel_tol * std::abs(v)))
                throw ConvergenceError("quadrature: adaptive refinement exhausted");
            total += v;
            return;
        }
        const double mid = 0.5 * (lo + hi);
        recurse(lo, mid, depth + 1);
        recurse(mid, hi, depth + 1);
    };
    recurse(a, b, 0);
    return total;
}

/// Bisection root finding for continuous f with f(lo), f(hi) of opposite
/// sign; returns the midpoint once |hi-lo| <= xtol (absolute).
template <class F>
double bisect_root(const F& f, double lo, double hi, double xtol = 1e-14,
                   int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw DomainError("bisect_root: no sign change on bracket");
    for (int i = 0; i < max_iter && std::abs(hi - lo) > xtol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) { lo = mid; flo = fm; }
        else { hi = mid; fhi = fm; }
    }
    return 0.5 * (lo + hi);
}

} // namespace lienard
