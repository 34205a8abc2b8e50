#ifndef HTV_SYMCORE_POLYNOMIAL_HPP
#define HTV_SYMCORE_POLYNOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "htv/symcore/rational.hpp"
#include "htv/symcore/variable.hpp"

namespace htv {

/// One exponent per variable, indexed by `index_of(Variable)`.
using Exponent = std::array<std::uint16_t, kVariableCount>;

inline unsigned total_degree(const Exponent& e) noexcept {
    return std::accumulate(e.begin(), e.end(), 0u);
}

/// Graded-lexicographic "greater than": higher total degree first, ties
/// broken lexicographically with Alpha as the most significant variable.
struct GradedLexGreater {
    bool operator()(const Exponent& lhs, const Exponent& rhs) const noexcept {
        const unsigned dl = total_degree(lhs);
        const unsigned dr = total_degree(rhs);
        if (dl != dr) {
            return dl > dr;
        }
        return lhs > rhs;
    }
};

inline Exponent operator+(const Exponent& lhs, const Exponent& rhs) noexcept {
    Exponent out{};
    for (std::size_t i = 0; i < kVariableCount; ++i) {
        out[i] = static_cast<std::uint16_t>(lhs[i] + rhs[i]);
    }
    return out;
}

/// True iff every exponent of `divisor` is <= the matching one in `e`.
inline bool divides(const Exponent& divisor, const Exponent& e) noexcept {
    for (std::size_t i = 0; i < kVariableCount; ++i) {
        if (divisor[i] > e[i]) {
            return false;
        }
    }
    return true;
}

inline Exponent operator-(const Exponent& lhs, const Exponent& rhs) noexcept {
    Exponent out{};
    for (std::size_t i = 0; i < kVariableCount; ++i) {
        out[i] = static_cast<std::uint16_t>(lhs[i] - rhs[i]);
    }
    return out;
}

inline Exponent unit_exponent(Variable v, unsigned power = 1) noexcept {
    Exponent e{};
    e[index_of(v)] = static_cast<std::uint16_t>(power);
    return e;
}

/**
 * Sparse multivariate polynomial with exact rational coefficients over the
 * fixed variable universe.
 *
 * Terms are kept in a map ordered by descending graded-lex exponent, and no
 * stored coefficient is ever zero, so structural equality is mathematical
 * equality.
 */
class Polynomial {
public:
    using TermMap = std::map<Exponent, Rational, GradedLexGreater>;

    Polynomial() = default;
    Polynomial(const Rational& constant) { add_term(Exponent{}, constant); }
    Polynomial(long constant) : Polynomial(Rational(constant)) {}

    static Polynomial variable(Variable v, unsigned power = 1) {
        return monomial(Rational(1), unit_exponent(v, power));
    }

    static Polynomial monomial(const Rational& coefficient, const Exponent& exponent) {
        Polynomial p;
        p.add_term(exponent, coefficient);
        return p;
    }

    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && htv::total_degree(terms_.begin()->first) == 0);
    }

    /// Constant term (zero if absent).
    Rational constant_term() const { return coefficient_of(Exponent{}); }

    Rational coefficient_of(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Leading term under graded-lex. Precondition: nonzero.
    const std::pair<const Exponent, Rational>& leading_term() const { return *terms_.begin(); }

    /// Degree in `v`; -1 for the zero polynomial.
    int degree(Variable v) const noexcept {
        if (terms_.empty()) {
            return -1;
        }
        int d = 0;
        for (const auto& [e, coeff] : terms_) {
            d = std::max(d, static_cast<int>(e[index_of(v)]));
        }
        return d;
    }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const noexcept {
        return terms_.empty() ? -1 : static_cast<int>(htv::total_degree(terms_.begin()->first));
    }

    bool depends_on(Variable v) const noexcept { return degree(v) > 0; }

    /// Coefficient of v^power, as a polynomial in the other variables.
    Polynomial coefficient(Variable v, unsigned power) const {
        Polynomial out;
        for (const auto& [e, coeff] : terms_) {
            if (e[index_of(v)] == power) {
                Exponent rest = e;
                rest[index_of(v)] = 0;
                out.terms_.emplace(rest, coeff);
            }
        }
        return out;
    }

    /// Coefficients in `v`, index = power. Empty for the zero polynomial.
    std::vector<Polynomial> coefficients(Variable v) const {
        std::vector<Polynomial> out(static_cast<std::size_t>(degree(v) + 1));
        for (const auto& [e, coeff] : terms_) {
            Exponent rest = e;
            rest[index_of(v)] = 0;
            out[e[index_of(v)]].terms_.emplace(rest, coeff);
        }
        return out;
    }

    Polynomial leading_coefficient(Variable v) const {
        const int d = degree(v);
        return d < 0 ? Polynomial() : coefficient(v, static_cast<unsigned>(d));
    }

    /// Adds c*x^e in place; drops the term if the sum cancels.
    void add_term(const Exponent& e, const Rational& c) {
        if (sgn(c) == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) {
                terms_.erase(it);
            }
        }
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        for (const auto& [e, c] : rhs.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) {
        for (const auto& [e, c] : rhs.terms_) {
            add_term(e, -c);
        }
        return *this;
    }

    Polynomial& operator*=(const Rational& s) {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    Polynomial& operator*=(const Polynomial& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

    friend Polynomial operator-(Polynomial p) {
        for (auto& [e, c] : p.terms_) {
            c = -c;
        }
        return p;
    }

    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
        Polynomial out;
        if (lhs.is_zero() || rhs.is_zero()) {
            return out;
        }
        Rational product;
        for (const auto& [el, cl] : lhs.terms_) {
            for (const auto& [er, cr] : rhs.terms_) {
                product = cl * cr;
                out.add_term(el + er, product);
            }
        }
        return out;
    }

    friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
    friend Polynomial operator*(Polynomial p, long s) { return p *= Rational(s); }
    friend Polynomial operator*(long s, Polynomial p) { return p *= Rational(s); }

    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.terms_ == rhs.terms_; }
    friend bool operator!=(const Polynomial& lhs, const Polynomial& rhs) { return !(lhs == rhs); }

private:
    TermMap terms_;
};

inline Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result(1);
    Polynomial square = base;
    while (exponent > 0) {
        if (exponent & 1u) {
            result *= square;
        }
        exponent >>= 1u;
        if (exponent > 0) {
            square = square * square;
        }
    }
    return result;
}

/// Formal partial derivative with respect to `v`.
inline Polynomial partial_derivative(const Polynomial& p, Variable v) {
    Polynomial out;
    const std::size_t i = index_of(v);
    for (const auto& [e, c] : p.terms()) {
        if (e[i] == 0) {
            continue;
        }
        Exponent lowered = e;
        lowered[i] = static_cast<std::uint16_t>(e[i] - 1);
        out.add_term(lowered, c * e[i]);
    }
    return out;
}

/// Image of p under v -> q; all other variables are untouched.
inline Polynomial substitute(const Polynomial& p, Variable v, const Polynomial& q) {
    const int degree = p.degree(v);
    if (degree <= 0) {
        return p;
    }
    std::vector<Polynomial> powers{Polynomial(1)};
    for (int k = 1; k <= degree; ++k) {
        powers.push_back(powers.back() * q);
    }
    Polynomial out;
    const std::vector<Polynomial> coeffs = p.coefficients(v);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k].is_zero()) {
            out += coeffs[k] * powers[k];
        }
    }
    return out;
}

/// Substitutes a rational value for `v`.
inline Polynomial substitute(const Polynomial& p, Variable v, const Rational& value) {
    return substitute(p, v, Polynomial(value));
}

/**
 * Evaluates p at `point` in any ring T. `convert` maps a Rational
 * coefficient into T (identity for exact evaluation, `get_d` for doubles).
 */
template <class T, class Convert>
T evaluate(const Polynomial& p, const std::array<T, kVariableCount>& point, Convert convert) {
    std::array<std::vector<T>, kVariableCount> powers;
    for (std::size_t i = 0; i < kVariableCount; ++i) {
        powers[i].push_back(T(1));
    }
    T sum(0);
    for (const auto& [e, c] : p.terms()) {
        T term = convert(c);
        for (std::size_t i = 0; i < kVariableCount; ++i) {
            if (e[i] == 0) {
                continue;
            }
            auto& table = powers[i];
            while (table.size() <= e[i]) {
                table.push_back(table.back() * point[i]);
            }
            term *= table[e[i]];
        }
        sum += term;
    }
    return sum;
}

using RationalPoint = std::array<Rational, kVariableCount>;

inline Rational evaluate(const Polynomial& p, const RationalPoint& point) {
    return evaluate<Rational>(p, point, [](const Rational& c) { return c; });
}

}  // namespace htv

#endif  // HTV_SYMCORE_POLYNOMIAL_HPP
