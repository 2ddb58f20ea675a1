#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lienard/errors.hpp"
#include "lienard/rational.hpp"

namespace lienard {

/// Coefficients smaller than this after add/mul are float-cancellation
/// ghosts and get dropped.
inline constexpr double kCoeffCleanup = 1e-14;

namespace detail {
inline double coeff_abs(double c) { return std::abs(c); }
inline double coeff_abs(const std::complex<double>& c) { return std::abs(c); }
} // namespace detail

template <class Coeff>
struct BasicPowerTerm {
    Coeff coeff;
    Rational exponent;
};

/// Finite sum of coeff * x^exponent terms with exact rational exponents,
/// kept sorted by exponent with no duplicates and no zero coefficients.
/// An empty term list is the zero expression. Immutable value type.
template <class Coeff>
class BasicPowerExpr {
public:
    using Term = BasicPowerTerm<Coeff>;

    BasicPowerExpr() = default;

    static BasicPowerExpr zero() { return BasicPowerExpr(); }

    static BasicPowerExpr monomial(Coeff c, Rational e) {
        BasicPowerExpr ex;
        if (detail::coeff_abs(c) != 0.0) ex.terms_.push_back({c, e});
        return ex;
    }

    static BasicPowerExpr constant(Coeff c) { return monomial(c, Rational(0)); }

    /// The identity monomial x.
    static BasicPowerExpr x() { return monomial(Coeff(1), Rational(1)); }

    /// Builds from an arbitrary term list (merges duplicates, sorts, cleans).
    static BasicPowerExpr from_terms(std::vector<Term> terms) {
        BasicPowerExpr ex;
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
        for (const Term& t : terms) {
            if (!ex.terms_.empty() && ex.terms_.back().exponent == t.exponent)
                ex.terms_.back().coeff += t.coeff;
            else
                ex.terms_.push_back(t);
        }
        ex.cleanup();
        return ex;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient at a given exponent (0 when absent).
    Coeff coeff_at(const Rational& e) const {
        for (const Term& t : terms_)
            if (t.exponent == e) return t.coeff;
        return Coeff(0);
    }

    Rational min_exponent() const { return terms_.front().exponent; }
    Rational max_exponent() const { return terms_.back().exponent; }

    /// Evaluates at x. Requires x > 0 unless every exponent is an integer
    /// (negative integer exponents additionally require x != 0).
    Coeff eval(double x) const {
        Coeff sum(0);
        for (const Term& t : terms_) sum += t.coeff * pow_term(x, t.exponent);
        return sum;
    }

    /// Term-wise derivative: c*e*x^{e-1}; constant terms vanish.
    BasicPowerExpr derivative() const {
        BasicPowerExpr out;
        for (const Term& t : terms_) {
            if (t.exponent.is_zero()) continue;
            out.terms_.push_back({t.coeff * Coeff(t.exponent.to_double()),
                                  t.exponent - Rational(1)});
        }
        return out;
    }

    BasicPowerExpr scaled(Coeff s) const {
        BasicPowerExpr out;
        if (detail::coeff_abs(s) == 0.0) return out;
        out.terms_ = terms_;
        for (Term& t : out.terms_) t.coeff *= s;
        return out;
    }

    /// Multiplies every term by x^shift.
    BasicPowerExpr shifted(const Rational& shift) const {
        BasicPowerExpr out;
        out.terms_ = terms_;
        for (Term& t : out.terms_) t.exponent = t.exponent + shift;
        return out;
    }

    friend BasicPowerExpr operator+(const BasicPowerExpr& a, const BasicPowerExpr& b) {
        BasicPowerExpr out;
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->exponent < ib->exponent))
                out.terms_.push_back(*ia++);
            else if (ia == a.terms_.end() || ib->exponent < ia->exponent)
                out.terms_.push_back(*ib++);
            else {
                out.terms_.push_back({ia->coeff + ib->coeff, ia->exponent});
                ++ia; ++ib;
            }
        }
        out.cleanup();
        return out;
    }

    friend BasicPowerExpr operator-(const BasicPowerExpr& a, const BasicPowerExpr& b) {
        return a + b.scaled(Coeff(-1));
    }

    BasicPowerExpr operator-() const { return scaled(Coeff(-1)); }

    friend BasicPowerExpr operator*(const BasicPowerExpr& a, const BasicPowerExpr& b) {
        std::vector<Term> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const Term& ta : a.terms_)
            for (const Term& tb : b.terms_)
                prod.push_back({ta.coeff * tb.coeff, ta.exponent + tb.exponent});
        return from_terms(std::move(prod));
    }

    friend bool operator==(const BasicPowerExpr& a, const BasicPowerExpr& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].exponent != b.terms_[i].exponent ||
                a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }

    /// Largest coefficient magnitude (0 for the zero expression).
    double max_abs_coeff() const {
        double m = 0.0;
        for (const Term& t : terms_) m = std::max(m, detail::coeff_abs(t.coeff));
        return m;
    }

    std::string str(const std::string& var = "x") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const Term& t : terms_) {
            if (!first) os << " + ";
            first = false;
            os << t.coeff;
            if (!t.exponent.is_zero()) os << "*" << var << "^(" << t.exponent << ")";
        }
        return os.str();
    }

private:
    static Coeff pow_term(double x, const Rational& e) {
        if (e.is_zero()) return Coeff(1);
        if (x > 0.0) return Coeff(std::pow(x, e.to_double()));
        if (!e.is_integer())
            throw DomainError("power expression evaluated at x <= 0 with fractional exponent x^(" +
                              e.str() + ")");
        if (x == 0.0) {
            if (e.num() > 0) return Coeff(0);
            throw DomainError("power expression evaluated at x = 0 with negative exponent");
        }
        double mag = std::pow(-x, e.to_double());
        return (e.num() % 2 != 0) ? Coeff(-mag) : Coeff(mag);
    }

    void cleanup() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const Term& t) {
                                        return detail::coeff_abs(t.coeff) < kCoeffCleanup;
                                    }),
                     terms_.end());
    }

    std::vector<Term> terms_;
};

using PowerExpr = BasicPowerExpr<double>;
using PowerTerm = BasicPowerTerm<double>;
using ComplexPowerExpr = BasicPowerExpr<std::complex<double>>;

/// Aligned coefficient table over the union of exponents of two expressions;
/// absent coefficients report as 0.
template <class Coeff>
std::map<Rational, std::pair<Coeff, Coeff>>
match_coefficients(const BasicPowerExpr<Coeff>& lhs, const BasicPowerExpr<Coeff>& rhs) {
    std::map<Rational, std::pair<Coeff, Coeff>> table;
    for (const auto& t : lhs.terms()) table[t.exponent].first = t.coeff;
    for (const auto& t : rhs.terms()) table[t.exponent].second = t.coeff;
    return table;
}

/// Promotes a real expression to complex coefficients.
inline ComplexPowerExpr to_complex(const PowerExpr& e) {
    std::vector<BasicPowerTerm<std::complex<double>>> ts;
    ts.reserve(e.terms().size());
    for (const auto& t : e.terms())
        ts.push_back({std::complex<double>(t.coeff, 0.0), t.exponent});
    return ComplexPowerExpr::from_terms(std::move(ts));
}

/// Demotes a complex expression whose imaginary parts all cancel below tol;
/// throws NonRealExpansion otherwise.
inline PowerExpr to_real(const ComplexPowerExpr& e, double tol = 1e-12) {
    std::vector<PowerTerm> ts;
    ts.reserve(e.terms().size());
    for (const auto& t : e.terms()) {
        if (std::abs(t.coeff.imag()) > tol)
            throw NonRealExpansion("imaginary coefficient " + std::to_string(t.coeff.imag()) +
                                   " at exponent " + t.exponent.str() + " exceeds tolerance");
        ts.push_back({t.coeff.real(), t.exponent});
    }
    return PowerExpr::from_terms(std::move(ts));
}

// Spec-level operation aliases.
template <class C>
BasicPowerExpr<C> add(const BasicPowerExpr<C>& a, const BasicPowerExpr<C>& b) { return a + b; }
template <class C>
BasicPowerExpr<C> mul(const BasicPowerExpr<C>& a, const BasicPowerExpr<C>& b) { return a * b; }
template <class C>
BasicPowerExpr<C> scale(const BasicPowerExpr<C>& a, C s) { return a.scaled(s); }
template <class C>
BasicPowerExpr<C> derivative(const BasicPowerExpr<C>& a) { return a.derivative(); }
template <class C>
C eval(const BasicPowerExpr<C>& a, double x) { return a.eval(x); }

} // namespace lienard
