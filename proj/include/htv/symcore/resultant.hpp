#ifndef HTV_SYMCORE_RESULTANT_HPP
#define HTV_SYMCORE_RESULTANT_HPP

#include <utility>
#include <vector>

#include "htv/error.hpp"
#include "htv/symcore/division.hpp"
#include "htv/symcore/polynomial.hpp"

namespace htv {

/// Row-major square matrix of polynomials.
using PolynomialMatrix = std::vector<std::vector<Polynomial>>;

/**
 * Sylvester matrix of p, q in `v`: deg_v q shifted rows of p's coefficients
 * (highest power first) followed by deg_v p shifted rows of q's.
 */
inline PolynomialMatrix sylvester_matrix(const Polynomial& p, const Polynomial& q, Variable v) {
    const int m = p.degree(v);
    const int n = q.degree(v);
    if (m <= 0 || n <= 0) {
        throw DegenerateInput("sylvester_matrix: both polynomials must depend on the eliminated variable");
    }
    const std::size_t size = static_cast<std::size_t>(m + n);
    PolynomialMatrix matrix(size, std::vector<Polynomial>(size));
    const auto pc = p.coefficients(v);
    const auto qc = q.coefficients(v);
    for (int row = 0; row < n; ++row) {
        for (int k = 0; k <= m; ++k) {
            matrix[row][row + k] = pc[m - k];
        }
    }
    for (int row = 0; row < m; ++row) {
        for (int k = 0; k <= n; ++k) {
            matrix[n + row][row + k] = qc[n - k];
        }
    }
    return matrix;
}

/**
 * Fraction-free (Bareiss) determinant. Every division is exact; row swaps
 * flip the sign.
 */
inline Polynomial bareiss_determinant(PolynomialMatrix matrix) {
    const std::size_t n = matrix.size();
    if (n == 0) {
        return Polynomial(1);
    }
    bool negate = false;
    Polynomial previous(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (matrix[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && matrix[pivot][k].is_zero()) {
                ++pivot;
            }
            if (pivot == n) {
                return Polynomial();
            }
            std::swap(matrix[k], matrix[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial numerator = matrix[i][j] * matrix[k][k] - matrix[i][k] * matrix[k][j];
                matrix[i][j] = exact_divide(numerator, previous);
            }
            matrix[i][k] = Polynomial();
        }
        previous = matrix[k][k];
    }
    Polynomial det = matrix[n - 1][n - 1];
    return negate ? -det : det;
}

/// Res_v(p, q) = det(Sylvester(p, q)), p's rows first.
inline Polynomial resultant(const Polynomial& p, const Polynomial& q, Variable v) {
    return bareiss_determinant(sylvester_matrix(p, q, v));
}

/// Output of the subresultant polynomial remainder sequence.
struct SubresultantChain {
    /// f, g, then each pseudo-remainder divided by its Brown-Collins factor.
    std::vector<Polynomial> sequence;
    /// The divisors applied to each pseudo-remainder after the first.
    std::vector<Polynomial> divisors;
    /// Res_v(p, q) in the det(Sylvester(p, q)) convention; zero when the
    /// chain ends above degree 0.
    Polynomial resultant;
    /// Last nonzero element of the sequence.
    Polynomial last_nonzero;
    bool swapped = false;
};

/**
 * Subresultant PRS (Brown 1978) in `v` over Q[other variables]. When
 * deg p < deg q the chain runs on (q, p) and the resultant is corrected by
 * (-1)^(deg p * deg q).
 */
inline SubresultantChain subresultant_chain(const Polynomial& p, const Polynomial& q, Variable v) {
    if (p.degree(v) <= 0 || q.degree(v) <= 0) {
        throw DegenerateInput("subresultant_chain: both polynomials must depend on the eliminated variable");
    }
    SubresultantChain chain;
    Polynomial f = p;
    Polynomial g = q;
    int n = f.degree(v);
    int m = g.degree(v);
    const bool odd_swap = (n < m) && ((n * m) % 2 == 1);
    if (n < m) {
        std::swap(f, g);
        std::swap(n, m);
        chain.swapped = true;
    }
    chain.sequence = {f, g};
    int d = n - m;
    Polynomial b = (d + 1) % 2 == 0 ? Polynomial(1) : Polynomial(-1);
    Polynomial h = pseudo_remainder(f, g, v) * b.constant_term();
    chain.divisors.push_back(b);
    Polynomial lc = g.leading_coefficient(v);
    Polynomial c = pow(lc, static_cast<unsigned>(d));
    Polynomial scalar = c;
    c = -c;
    while (!h.is_zero()) {
        const int k = h.degree(v);
        chain.sequence.push_back(h);
        f = std::move(g);
        g = h;
        d = m - k;
        m = k;
        b = -lc * pow(c, static_cast<unsigned>(d));
        h = exact_divide(pseudo_remainder(f, g, v), b);
        chain.divisors.push_back(b);
        lc = g.leading_coefficient(v);
        if (d > 1) {
            c = exact_divide(pow(-lc, static_cast<unsigned>(d)), pow(c, static_cast<unsigned>(d - 1)));
        } else {
            c = -lc;
        }
        scalar = -c;
    }
    chain.last_nonzero = chain.sequence.back();
    if (chain.last_nonzero.degree(v) > 0) {
        chain.resultant = Polynomial();
    } else {
        chain.resultant = odd_swap ? -scalar : scalar;
    }
    return chain;
}

}  // namespace htv

#endif  // HTV_SYMCORE_RESULTANT_HPP
