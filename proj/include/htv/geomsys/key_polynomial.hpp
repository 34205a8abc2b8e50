#ifndef HTV_GEOMSYS_KEY_POLYNOMIAL_HPP
#define HTV_GEOMSYS_KEY_POLYNOMIAL_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "htv/geomsys/reduction.hpp"
#include "htv/symcore/division.hpp"
#include "htv/symcore/text.hpp"

namespace htv::geom {

inline constexpr const char* kKeyPolynomialFile = "key_polynomial.poly";

/// Reads the golden key polynomial. Throws Error if the file is unreadable
/// and ParseError if it is malformed.
inline Polynomial load_key_polynomial(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot read key polynomial fixture '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_polynomial(buffer.str());
}

struct CoefficientPair {
    std::string monomial;
    Rational expected;
    Rational computed;
};

struct KeyPolynomialReport {
    /// Raw D(C2) before any rewriting.
    Polynomial derivative;
    Polynomial clearing_multiplier;
    /// Monomial in {alpha, u} divided out of the reduced form.
    Polynomial extracted_factor;
    /// Reduced form in {alpha, kappa, c} after the factor is removed.
    Polynomial reduced;
    Rational lambda;
    bool match = false;
    /// One entry per fixture term, in canonical order.
    std::vector<CoefficientPair> coefficient_table;
    /// First monomial where reduced != lambda * fixture, if any.
    std::optional<CoefficientPair> first_mismatch;
};

/**
 * Differentiates C2 = u A4 - alpha w A5 along e1, reduces modulo the
 * constraints, strips the largest monomial factor in {alpha, u}, and compares
 * what is left against `fixture` up to a single rational factor lambda.
 */
inline KeyPolynomialReport derive_key_polynomial(const SystemSpec& spec, const Polynomial& fixture) {
    KeyPolynomialReport report;
    report.derivative = apply_derivation(spec, spec.constraints[1]);
    const ReductionResult reduction = reduce_modulo_constraints(spec, report.derivative);
    report.clearing_multiplier = reduction.clearing_multiplier;

    Exponent factor = monomial_content(reduction.reduced);
    for (Variable v : kAllVariables) {
        if (v != Variable::Alpha && v != Variable::U) {
            factor[index_of(v)] = 0;
        }
    }
    report.extracted_factor = Polynomial::monomial(Rational(1), factor);
    report.reduced = divide_by_monomial(reduction.reduced, factor);

    // lambda is read off the fixture term of highest kappa degree (the
    // displayed leading term 140608 k^4).
    if (!fixture.is_zero()) {
        auto anchor = fixture.terms().begin();
        for (auto it = fixture.terms().begin(); it != fixture.terms().end(); ++it) {
            if (it->first[index_of(Variable::Kappa)] > anchor->first[index_of(Variable::Kappa)]) {
                anchor = it;
            }
        }
        report.lambda = report.reduced.coefficient_of(anchor->first) / anchor->second;
    }
    for (const auto& [e, expected] : fixture.terms()) {
        report.coefficient_table.push_back(
            {canonical_text(Polynomial::monomial(Rational(1), e)), expected, report.reduced.coefficient_of(e)});
    }

    const Polynomial expected = fixture * report.lambda;
    report.match = sgn(report.lambda) != 0 && report.reduced == expected;
    if (!report.match) {
        // Walk the union of supports in canonical order.
        Polynomial::TermMap support = fixture.terms();
        for (const auto& [e, c] : report.reduced.terms()) {
            support.try_emplace(e, Rational(0));
        }
        for (const auto& [e, unused] : support) {
            if (report.reduced.coefficient_of(e) != expected.coefficient_of(e)) {
                report.first_mismatch = CoefficientPair{canonical_text(Polynomial::monomial(Rational(1), e)),
                                                        fixture.coefficient_of(e), report.reduced.coefficient_of(e)};
                break;
            }
        }
    }
    return report;
}

}  // namespace htv::geom

#endif  // HTV_GEOMSYS_KEY_POLYNOMIAL_HPP
