#ifndef HTV_SYMCORE_DIVISION_HPP
#define HTV_SYMCORE_DIVISION_HPP

#include <string>

#include "htv/error.hpp"
#include "htv/symcore/polynomial.hpp"

namespace htv {

/// multiplier * dividend = quotient * divisor + remainder.
struct PseudoDivision {
    Polynomial multiplier;
    Polynomial quotient;
    Polynomial remainder;
};

/**
 * Pseudo-division in `v`. The multiplier is lc_v(q)^(deg_v p - deg_v q + 1)
 * when deg_v p >= deg_v q, and 1 otherwise; deg_v remainder < deg_v q.
 */
inline PseudoDivision pseudo_divide(const Polynomial& p, const Polynomial& q, Variable v) {
    if (q.is_zero()) {
        throw DivisionByZero("pseudo_divide: divisor is the zero polynomial");
    }
    const int dq = q.degree(v);
    const int dp = p.degree(v);
    if (dp < dq) {
        return {Polynomial(1), Polynomial(), p};
    }
    const Polynomial lead = q.leading_coefficient(v);
    Polynomial quotient;
    Polynomial remainder = p;
    int pending = dp - dq + 1;
    while (!remainder.is_zero() && remainder.degree(v) >= dq) {
        const int shift = remainder.degree(v) - dq;
        const Polynomial step = remainder.leading_coefficient(v) * Polynomial::variable(v, static_cast<unsigned>(shift));
        quotient = lead * quotient + step;
        remainder = lead * remainder - step * q;
        --pending;
    }
    const Polynomial scale = pow(lead, static_cast<unsigned>(pending));
    return {pow(lead, static_cast<unsigned>(dp - dq + 1)), quotient * scale, remainder * scale};
}

/// Pseudo-remainder only.
inline Polynomial pseudo_remainder(const Polynomial& p, const Polynomial& q, Variable v) {
    return pseudo_divide(p, q, v).remainder;
}

/**
 * Exact multivariate division p / d by graded-lex leading terms. Throws
 * InexactDivision unless d divides p in Q[variables].
 */
inline Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) {
        throw DivisionByZero("exact_divide: divisor is the zero polynomial");
    }
    if (d.is_constant()) {
        return p * (Rational(1) / d.constant_term());
    }
    const auto& [lead_exp, lead_coeff] = d.leading_term();
    const Rational inverse = Rational(1) / lead_coeff;
    Polynomial quotient;
    Polynomial remainder = p;
    while (!remainder.is_zero()) {
        const auto& [e, c] = remainder.leading_term();
        if (!divides(lead_exp, e)) {
            throw InexactDivision("exact_divide: divisor does not divide dividend");
        }
        const Polynomial step = Polynomial::monomial(c * inverse, e - lead_exp);
        quotient += step;
        remainder -= step * d;
    }
    return quotient;
}

/// Largest monomial x^e dividing every term of p (zero exponent for p = 0).
inline Exponent monomial_content(const Polynomial& p) {
    if (p.is_zero()) {
        return Exponent{};
    }
    Exponent out = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < kVariableCount; ++i) {
            out[i] = std::min(out[i], e[i]);
        }
    }
    return out;
}

/// Divides out a monomial that divides every term.
inline Polynomial divide_by_monomial(const Polynomial& p, const Exponent& m) {
    Polynomial out;
    for (const auto& [e, c] : p.terms()) {
        out.add_term(e - m, c);
    }
    return out;
}

/**
 * Rational content: the positive rational r such that p / r has coprime
 * integer coefficients. Zero for p = 0.
 */
inline Rational rational_content(const Polynomial& p) {
    if (p.is_zero()) {
        return Rational(0);
    }
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        num_gcd = gcd(num_gcd, Integer(c.get_num()));
        den_lcm = lcm(den_lcm, Integer(c.get_den()));
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    return content;
}

/// p divided by its rational content, sign chosen so the leading graded-lex
/// coefficient is positive.
inline Polynomial primitive_integer_part(const Polynomial& p) {
    if (p.is_zero()) {
        return p;
    }
    Rational scale = Rational(1) / rational_content(p);
    if (sgn(p.leading_term().second) < 0) {
        scale = -scale;
    }
    return p * scale;
}

}  // namespace htv

#endif  // HTV_SYMCORE_DIVISION_HPP
