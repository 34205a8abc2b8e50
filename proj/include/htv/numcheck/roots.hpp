#ifndef HTV_NUMCHECK_ROOTS_HPP
#define HTV_NUMCHECK_ROOTS_HPP

#include <cstdlib>
#include <vector>

#include "htv/error.hpp"
#include "htv/symcore/polynomial.hpp"

namespace htv::num {

/// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros.
using DenseRational = std::vector<Rational>;

namespace detail {

inline void trim(DenseRational& p) {
    while (!p.empty() && sgn(p.back()) == 0) {
        p.pop_back();
    }
}

inline Rational horner(const DenseRational& p, const Rational& x) {
    Rational value(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        value = value * x + *it;
    }
    return value;
}

inline DenseRational derivative(const DenseRational& p) {
    DenseRational d;
    for (std::size_t i = 1; i < p.size(); ++i) {
        d.push_back(p[i] * Rational(static_cast<long>(i)));
    }
    trim(d);
    return d;
}

inline DenseRational remainder(DenseRational a, const DenseRational& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= factor * b[i];
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

inline DenseRational quotient(DenseRational a, const DenseRational& b) {
    if (a.size() < b.size()) {
        return {};
    }
    DenseRational q(a.size() - b.size() + 1);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= factor * b[i];
        }
        a.pop_back();
        trim(a);
    }
    trim(q);
    return q;
}

inline void make_monic(DenseRational& p) {
    const Rational lead = p.back();
    for (auto& coefficient : p) {
        coefficient /= lead;
    }
}

inline DenseRational gcd(DenseRational a, DenseRational b) {
    while (!b.empty()) {
        DenseRational r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        make_monic(a);
    }
    return a;
}

inline int sign_variations(const std::vector<DenseRational>& sturm, const Rational& x) {
    int variations = 0;
    int previous = 0;
    for (const auto& s : sturm) {
        const int current = sgn(horner(s, x));
        if (current == 0) {
            continue;
        }
        if (previous != 0 && current != previous) {
            ++variations;
        }
        previous = current;
    }
    return variations;
}

}  // namespace detail

/// Converts a polynomial in `v` alone to dense form; throws DegenerateInput otherwise.
inline DenseRational to_dense(const Polynomial& p, Variable v) {
    DenseRational dense;
    for (const auto& [e, c] : p.terms()) {
        for (Variable other : kAllVariables) {
            if (other != v && e[index_of(other)] != 0) {
                throw DegenerateInput("root isolation needs a univariate polynomial in " + std::string(name_of(v)));
            }
        }
        const std::size_t k = e[index_of(v)];
        if (dense.size() <= k) {
            dense.resize(k + 1);
        }
        dense[k] = c;
    }
    detail::trim(dense);
    return dense;
}

/// Sturm sequence of the square-free part of p.
inline std::vector<DenseRational> sturm_sequence(const DenseRational& p) {
    DenseRational g = detail::gcd(p, detail::derivative(p));
    DenseRational square_free = g.size() > 1 ? detail::quotient(p, g) : p;
    detail::make_monic(square_free);
    std::vector<DenseRational> sequence{square_free, detail::derivative(square_free)};
    while (!sequence.back().empty()) {
        DenseRational r = detail::remainder(sequence[sequence.size() - 2], sequence.back());
        for (auto& coefficient : r) {
            coefficient = -coefficient;
        }
        if (r.empty()) {
            break;
        }
        sequence.push_back(std::move(r));
    }
    return sequence;
}

/// Exactly one distinct real root lies in (lower, upper].
struct RootInterval {
    Rational lower;
    Rational upper;
    /// The square-free part changes sign across [lower, upper]. False only
    /// when the root sits exactly on `upper`.
    bool sign_change = false;

    double midpoint() const { return Rational((lower + upper) / 2).get_d(); }
    Rational width() const { return upper - lower; }
};

/**
 * Isolates every distinct real root of p into pairwise disjoint half-open
 * intervals of width at most `max_width`, using exact Sturm counts.
 * Throws ZeroPolynomial for p = 0.
 */
inline std::vector<RootInterval> isolate_real_roots(const DenseRational& p,
                                                    const Rational& max_width = Rational(1, 1 << 30)) {
    DenseRational poly = p;
    detail::trim(poly);
    if (poly.empty()) {
        throw ZeroPolynomial("isolate_real_roots: the polynomial is identically zero");
    }
    if (poly.size() == 1) {
        return {};
    }
    const std::vector<DenseRational> sturm = sturm_sequence(poly);
    const DenseRational& square_free = sturm.front();

    Rational bound(1);
    for (std::size_t i = 0; i + 1 < square_free.size(); ++i) {
        Rational ratio = abs(square_free[i] / square_free.back());
        bound = std::max(bound, Rational(Rational(1) + ratio));
    }

    std::vector<RootInterval> roots;
    struct Pending {
        Rational lower, upper;
        int v_lower, v_upper;
    };
    std::vector<Pending> stack{{-bound, bound, detail::sign_variations(sturm, -bound),
                                detail::sign_variations(sturm, bound)}};
    while (!stack.empty()) {
        Pending cell = stack.back();
        stack.pop_back();
        const int count = cell.v_lower - cell.v_upper;
        if (count == 0) {
            continue;
        }
        if (count == 1 && cell.upper - cell.lower <= max_width) {
            const int s_lower = sgn(detail::horner(square_free, cell.lower));
            const int s_upper = sgn(detail::horner(square_free, cell.upper));
            roots.push_back({cell.lower, cell.upper, s_lower * s_upper < 0});
            continue;
        }
        Rational middle = (cell.lower + cell.upper) / 2;
        const int v_middle = detail::sign_variations(sturm, middle);
        stack.push_back({middle, cell.upper, v_middle, cell.v_upper});
        stack.push_back({cell.lower, middle, cell.v_lower, v_middle});
    }
    return roots;
}

inline std::vector<RootInterval> isolate_real_roots(const Polynomial& p, Variable v = Variable::Alpha,
                                                    const Rational& max_width = Rational(1, 1 << 30)) {
    if (p.is_zero()) {
        throw ZeroPolynomial("isolate_real_roots: the polynomial is identically zero");
    }
    return isolate_real_roots(to_dense(p, v), max_width);
}

}  // namespace htv::num

#endif  // HTV_NUMCHECK_ROOTS_HPP
