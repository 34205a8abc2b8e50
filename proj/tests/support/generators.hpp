#ifndef HTV_TESTS_GENERATORS_HPP
#define HTV_TESTS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "htv/symcore/polynomial.hpp"

namespace htv::testing {

/// Deterministic source of small random exact values, from raw engine output only.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    long integer(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(engine_() % span);
    }

    Rational rational(long max_numerator = 9, long max_denominator = 4) {
        Rational r(integer(-max_numerator, max_numerator), integer(1, max_denominator));
        r.canonicalize();
        return r;
    }

    Rational nonzero_rational(long max_numerator = 9, long max_denominator = 4) {
        Rational r;
        do {
            r = rational(max_numerator, max_denominator);
        } while (sgn(r) == 0);
        return r;
    }

    /// Random polynomial with up to `max_terms` terms in `vars`, each
    /// exponent at most `max_degree`.
    Polynomial polynomial(const std::vector<Variable>& vars, int max_terms, int max_degree) {
        Polynomial p;
        const long terms = integer(0, max_terms);
        for (long t = 0; t < terms; ++t) {
            Exponent e{};
            for (Variable v : vars) {
                e[index_of(v)] = static_cast<std::uint16_t>(integer(0, max_degree));
            }
            p.add_term(e, rational());
        }
        return p;
    }

    /// Random polynomial with exact degree `degree` in `main` and
    /// coefficients in `others`.
    Polynomial polynomial_in(Variable main, int degree, const std::vector<Variable>& others, int coeff_terms,
                             int coeff_degree) {
        Polynomial p;
        for (int k = 0; k <= degree; ++k) {
            Polynomial coeff = polynomial(others, coeff_terms, coeff_degree);
            if (k == degree && coeff.is_zero()) {
                coeff = Polynomial(nonzero_rational());
            }
            p += coeff * Polynomial::variable(main, static_cast<unsigned>(k));
        }
        return p;
    }

    RationalPoint point() {
        RationalPoint x;
        for (auto& value : x) {
            value = rational(7, 5);
        }
        return x;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace htv::testing

#endif  // HTV_TESTS_GENERATORS_HPP
