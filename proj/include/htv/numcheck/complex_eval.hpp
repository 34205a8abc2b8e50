#ifndef HTV_NUMCHECK_COMPLEX_EVAL_HPP
#define HTV_NUMCHECK_COMPLEX_EVAL_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "htv/symcore/polynomial.hpp"

namespace htv::num {

using Complex = std::complex<double>;
using ComplexPoint = std::array<Complex, kVariableCount>;

inline Complex evaluate(const Polynomial& p, const ComplexPoint& x) {
    return htv::evaluate<Complex>(p, x, [](const Rational& c) { return Complex(c.get_d(), 0.0); });
}

/// Largest |coefficient * monomial| over the terms of p at x.
inline double term_scale(const Polynomial& p, const ComplexPoint& x) {
    double scale = 0.0;
    for (const auto& [e, c] : p.terms()) {
        double magnitude = std::abs(c.get_d());
        for (std::size_t i = 0; i < kVariableCount; ++i) {
            if (e[i] != 0) {
                magnitude *= std::pow(std::abs(x[i]), static_cast<double>(e[i]));
            }
        }
        scale = std::max(scale, magnitude);
    }
    return scale;
}

/// |p(x)| / term_scale(p, x); the plain magnitude when the scale is zero.
inline double relative_magnitude(const Polynomial& p, const ComplexPoint& x) {
    const double value = std::abs(evaluate(p, x));
    const double scale = term_scale(p, x);
    return scale > 0.0 ? value / scale : value;
}

}  // namespace htv::num

#endif  // HTV_NUMCHECK_COMPLEX_EVAL_HPP
