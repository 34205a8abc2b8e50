#ifndef HTV_TESTS_ORACLES_HPP
#define HTV_TESTS_ORACLES_HPP

#include <utility>
#include <vector>

#include "htv/symcore/polynomial.hpp"

// Reference computations kept independent of the library routes they check.
namespace htv::testing::oracle {

/// Determinant over Q by Gaussian elimination with rational pivots.
inline Rational gaussian_determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(m[pivot][col]) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return Rational(0);
        }
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            const Rational factor = m[row][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) {
                m[row][j] -= factor * m[col][j];
            }
        }
    }
    return det;
}

/// Sylvester matrix of two univariate rational coefficient lists (highest
/// power first), p's rows first.
inline std::vector<std::vector<Rational>> numeric_sylvester(const std::vector<Rational>& p, const std::vector<Rational>& q) {
    const std::size_t m = p.size() - 1;
    const std::size_t n = q.size() - 1;
    std::vector<std::vector<Rational>> s(m + n, std::vector<Rational>(m + n, Rational(0)));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j <= m; ++j) {
            s[r][r + j] = p[j];
        }
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j <= n; ++j) {
            s[n + r][r + j] = q[j];
        }
    }
    return s;
}

inline std::vector<Rational> specialized_coefficients(const Polynomial& p, const RationalPoint& x, int degree) {
    std::vector<Rational> out;
    for (int d = degree; d >= 0; --d) {
        out.push_back(evaluate(p.coefficient(Variable::Kappa, static_cast<unsigned>(d)), x));
    }
    return out;
}

/// Sign changes of p sampled at the midpoints of `points` equal cells of [lo, hi].
inline int sign_scan(const std::vector<Rational>& p, double lo, double hi, int points) {
    auto value = [&](double x) {
        long double v = 0.0L;
        for (auto it = p.rbegin(); it != p.rend(); ++it) {
            v = v * x + it->get_d();
        }
        return v;
    };
    const double h = (hi - lo) / points;
    int changes = 0;
    long double previous = value(lo + 0.5 * h);
    for (int i = 1; i < points; ++i) {
        const long double current = value(lo + (i + 0.5) * h);
        if ((previous < 0) != (current < 0)) {
            ++changes;
        }
        previous = current;
    }
    return changes;
}

}  // namespace htv::testing::oracle

#endif  // HTV_TESTS_ORACLES_HPP
