#ifndef HTV_GEOMSYS_SYSTEM_HPP
#define HTV_GEOMSYS_SYSTEM_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "htv/error.hpp"
#include "htv/symcore/polynomial.hpp"

namespace htv::geom {

namespace detail {

inline Rational fraction(long numerator, long denominator = 1) {
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

inline Polynomial var(Variable v) { return Polynomial::variable(v); }

}  // namespace detail

/**
 * Principal curvature data of a non-minimal H-tensional hypersurface M^3 in
 * N^4(c) on the open set where grad(alpha) != 0. e1 is the direction of
 * grad(alpha), and it is principal with curvature -(3/2) alpha.
 */
struct PrincipalCurvatureData {
    Polynomial k1;
    Polynomial sum_k2k3;
    Polynomial product_kappa;
    Polynomial norm_A_squared;
    int dimension_m = 3;
};

inline PrincipalCurvatureData principal_curvature_data() {
    using detail::fraction;
    using detail::var;
    const Polynomial alpha = var(Variable::Alpha);
    PrincipalCurvatureData data;
    data.k1 = fraction(-3, 2) * alpha;
    data.sum_k2k3 = fraction(9, 2) * alpha;
    data.product_kappa = var(Variable::Kappa);
    data.norm_A_squared = data.k1 * data.k1 + data.sum_k2k3 * data.sum_k2k3 - 2L * data.product_kappa;
    return data;
}

/// Connection data on the principal frame. rho2 = rho3 = 0 is imported as an
/// axiom; only w = beta2 + beta3 and beta2*beta3 = -(kappa + c) survive.
struct ConnectionCoefficients {
    Polynomial beta2;
    Polynomial beta3;
    Polynomial rho2;
    Polynomial rho3;
    Polynomial sum_w;
    Polynomial product_relation;
};

inline ConnectionCoefficients connection_coefficients() {
    using detail::var;
    ConnectionCoefficients conn;
    conn.beta2 = var(Variable::Beta2);
    conn.beta3 = var(Variable::Beta3);
    conn.sum_w = var(Variable::W);
    conn.product_relation = conn.beta2 * conn.beta3 + var(Variable::Kappa) + var(Variable::C);
    return conn;
}

/// Derivation rules D(v), one optional entry per variable.
using DerivationTable = std::array<std::optional<Polynomial>, kVariableCount>;

/// One oriented rewrite `pattern -> replacement / clearing`.
struct ReductionRule {
    std::string name;
    Polynomial pattern;
    Polynomial replacement;
    Polynomial clearing;
};

struct SystemSpec {
    Polynomial a1, a2, a3, a4, a5;
    DerivationTable derivation;
    /// C1 = u w - alpha A1, C2 = u A4 - alpha w A5,
    /// C3 = u^2 A4 - alpha^2 A1 A5, C4 = A4 A1 - w^2 A5.
    std::array<Polynomial, 4> constraints;
    /// Applied in order: uw, w^2, u^2, then beta2*beta3 (extended ring only).
    std::vector<ReductionRule> reduction_rules;
};

namespace detail {

inline SystemSpec build_system_spec() {
    const Polynomial alpha = var(Variable::Alpha);
    const Polynomial kappa = var(Variable::Kappa);
    const Polynomial c = var(Variable::C);
    const Polynomial u = var(Variable::U);
    const Polynomial w = var(Variable::W);
    const Polynomial alpha2 = alpha * alpha;

    SystemSpec s;
    s.a1 = fraction(-9, 2) * kappa - fraction(15, 4) * c + fraction(189, 8) * alpha2;
    s.a2 = fraction(-13, 2) * kappa - fraction(15, 4) * c + fraction(369, 8) * alpha2;
    s.a3 = kappa + 9L * alpha2;
    s.a4 = fraction(13, 2) * kappa + fraction(31, 4) * c - 108L * alpha2;
    s.a5 = fraction(13, 2) * kappa + fraction(15, 2) * c - fraction(441, 4) * alpha2;

    s.derivation[index_of(Variable::Alpha)] = u;
    s.derivation[index_of(Variable::U)] = alpha * s.a2;
    s.derivation[index_of(Variable::Kappa)] = s.a3 * w - fraction(27, 4) * alpha * u;
    s.derivation[index_of(Variable::W)] = w * w + 2L * kappa + 4L * c - fraction(27, 4) * alpha2;
    s.derivation[index_of(Variable::C)] = Polynomial();

    s.constraints = {
        u * w - alpha * s.a1,
        u * s.a4 - alpha * w * s.a5,
        u * u * s.a4 - alpha2 * s.a1 * s.a5,
        s.a4 * s.a1 - w * w * s.a5,
    };

    s.reduction_rules = {
        {"uw", u * w, alpha * s.a1, Polynomial(1L)},
        {"w^2", w * w, s.a4 * s.a1, s.a5},
        {"u^2", u * u, alpha2 * s.a1 * s.a5, s.a4},
        {"b2*b3", var(Variable::Beta2) * var(Variable::Beta3), -(kappa + c), Polynomial(1L)},
    };
    return s;
}

}  // namespace detail

/// The encoded H-tensional system. Built once; every call returns the same
/// immutable value.
inline const SystemSpec& system_spec() {
    static const SystemSpec spec = detail::build_system_spec();
    return spec;
}

/**
 * Leibniz extension of a derivation table: D(p) = sum_v dp/dv * D(v).
 * Throws UnsupportedVariable if p involves a variable without a rule.
 */
inline Polynomial apply_derivation(const DerivationTable& rules, const Polynomial& p) {
    Polynomial out;
    for (Variable v : kAllVariables) {
        if (!p.depends_on(v)) {
            continue;
        }
        const auto& rule = rules[index_of(v)];
        if (!rule) {
            throw UnsupportedVariable("apply_derivation: no derivation rule for variable '" +
                                      std::string(name_of(v)) + "'");
        }
        if (!rule->is_zero()) {
            out += partial_derivative(p, v) * *rule;
        }
    }
    return out;
}

inline Polynomial apply_derivation(const SystemSpec& spec, const Polynomial& p) {
    return apply_derivation(spec.derivation, p);
}

}  // namespace htv::geom

#endif  // HTV_GEOMSYS_SYSTEM_HPP
