#ifndef HTV_GEOMSYS_REDUCTION_HPP
#define HTV_GEOMSYS_REDUCTION_HPP

#include <map>
#include <utility>

#include "htv/geomsys/system.hpp"

namespace htv::geom {

struct ReductionResult {
    Polynomial reduced;
    /// Product of powers of A4 and A5.
    Polynomial clearing_multiplier;
};

/**
 * Rewrites p in {alpha, kappa, c, u, w} so no monomial is divisible by uw,
 * w^2 or u^2. Postcondition:
 *
 *     clearing_multiplier * p == reduced   (mod C1, C3, C4)
 *
 * The rules fire in the fixed order uw, w^2, u^2; each lowers the (u, w)
 * degree, and the denominators A5 (from w^2) and A4 (from u^2) are cleared
 * by one global multiplier instead of working in a fraction field.
 */
inline ReductionResult reduce_modulo_constraints(const SystemSpec& spec, const Polynomial& p) {
    const ReductionRule& uw_rule = spec.reduction_rules.at(0);
    const ReductionRule& w2_rule = spec.reduction_rules.at(1);
    const ReductionRule& u2_rule = spec.reduction_rules.at(2);
    const std::size_t iu = index_of(Variable::U);
    const std::size_t iw = index_of(Variable::W);

    // (u power, w power) -> coefficient in the remaining variables, after uw.
    std::map<std::pair<unsigned, unsigned>, Polynomial> buckets;
    std::map<unsigned, Polynomial> uw_powers{{0u, Polynomial(1L)}};
    auto uw_power = [&](unsigned n) -> const Polynomial& {
        auto it = uw_powers.find(n);
        if (it == uw_powers.end()) {
            it = uw_powers.emplace(n, pow(uw_rule.replacement, n)).first;
        }
        return it->second;
    };
    for (const auto& [e, coeff] : p.terms()) {
        const unsigned i = e[iu];
        const unsigned j = e[iw];
        const unsigned m = std::min(i, j);
        Exponent rest = e;
        rest[iu] = 0;
        rest[iw] = 0;
        buckets[{i - m, j - m}] += Polynomial::monomial(coeff, rest) * uw_power(m);
    }

    unsigned max_w_half = 0;
    unsigned max_u_half = 0;
    for (const auto& [powers, coeff] : buckets) {
        max_u_half = std::max(max_u_half, powers.first / 2);
        max_w_half = std::max(max_w_half, powers.second / 2);
    }

    const Polynomial u = Polynomial::variable(Variable::U);
    const Polynomial w = Polynomial::variable(Variable::W);
    Polynomial reduced;
    for (const auto& [powers, coeff] : buckets) {
        const auto [i, j] = powers;
        Polynomial term = coeff;
        // w^j = (A4 A1 / A5)^(j/2) w^(j mod 2)
        term *= pow(w2_rule.replacement, j / 2) * pow(w2_rule.clearing, max_w_half - j / 2);
        term *= pow(u2_rule.replacement, i / 2) * pow(u2_rule.clearing, max_u_half - i / 2);
        if (j % 2 == 1) {
            term *= w;
        }
        if (i % 2 == 1) {
            term *= u;
        }
        reduced += term;
    }
    return {reduced, pow(w2_rule.clearing, max_w_half) * pow(u2_rule.clearing, max_u_half)};
}

/// Only the uw rule (no clearing); used for D(C1) -> C2.
inline Polynomial reduce_uw(const SystemSpec& spec, const Polynomial& p) {
    const ReductionRule& rule = spec.reduction_rules.at(0);
    const std::size_t iu = index_of(Variable::U);
    const std::size_t iw = index_of(Variable::W);
    Polynomial out;
    for (const auto& [e, coeff] : p.terms()) {
        const unsigned m = std::min(e[iu], e[iw]);
        Exponent rest = e;
        rest[iu] = static_cast<std::uint16_t>(e[iu] - m);
        rest[iw] = static_cast<std::uint16_t>(e[iw] - m);
        out += Polynomial::monomial(coeff, rest) * pow(rule.replacement, m);
    }
    return out;
}

}  // namespace htv::geom

#endif  // HTV_GEOMSYS_REDUCTION_HPP
