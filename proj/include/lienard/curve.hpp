#pragma once

#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "lienard/errors.hpp"

namespace lienard {

enum class Method { quadrature, closed_form, rk_oracle, parametric };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::quadrature:  return "quadrature";
        case Method::closed_form: return "closed-form";
        case Method::rk_oracle:   return "rk-oracle";
        case Method::parametric:  return "parametric";
    }
    return "?";
}

/// A sampled trajectory (t_i, x_i) with strictly increasing t, tagged with
/// the method that produced it and the constants used (t0, C, branch, ...).
struct SolutionCurve {
    std::vector<double> t;
    std::vector<double> x;
    Method method = Method::closed_form;
    std::map<std::string, double> meta;

    std::size_t size() const { return t.size(); }

    void push(double ti, double xi) {
        if (!t.empty() && ti <= t.back())
            throw GridError("SolutionCurve: sample times must be strictly increasing");
        t.push_back(ti);
        x.push_back(xi);
    }
};

/// A parametric solution branch: (param_i, a_i, b_i) where (a, b) is
/// (u, w) for Fisher curves or (eta, w) for canonical Abel curves.
struct ParametricCurve {
    std::vector<double> param;
    std::vector<double> a;
    std::vector<double> b;
    std::string a_name = "u";
    std::string b_name = "w";
    std::map<std::string, double> meta;

    std::size_t size() const { return param.size(); }
};

namespace detail {
inline std::string format_sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}
} // namespace detail

/// CSV with a header row, 12 significant digits, LF line endings.
inline void write_csv(std::ostream& os, const SolutionCurve& c) {
    os << "t,x\n";
    for (std::size_t i = 0; i < c.size(); ++i)
        os << detail::format_sig12(c.t[i]) << ',' << detail::format_sig12(c.x[i]) << '\n';
}

inline void write_csv(std::ostream& os, const ParametricCurve& c,
                      const std::string& param_name) {
    os << param_name << ',' << c.a_name << ',' << c.b_name << '\n';
    for (std::size_t i = 0; i < c.size(); ++i)
        os << detail::format_sig12(c.param[i]) << ',' << detail::format_sig12(c.a[i]) << ','
           << detail::format_sig12(c.b[i]) << '\n';
}

} // namespace lienard
