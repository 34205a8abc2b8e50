#ifndef HTV_GEOMSYS_IDENTITIES_HPP
#define HTV_GEOMSYS_IDENTITIES_HPP

#include <string>
#include <vector>

#include "htv/geomsys/reduction.hpp"
#include "htv/symcore/division.hpp"
#include "htv/symcore/text.hpp"

namespace htv::geom {

/**
 * Normal form in the extended ring Q[alpha, kappa, c, w, beta2, k2] obtained
 * from the relations
 *
 *     u = (2/9)(d2 + d3),  d2 = beta2 (k2 + 3/2 alpha),  d3 = beta3 (k3 + 3/2 alpha),
 *     beta3 = w - beta2,   k3 = 9/2 alpha - k2,
 *     k2^2 = 9/2 alpha k2 - kappa,   beta2^2 = w beta2 + kappa + c.
 *
 * The two quadratic relations have coprime leading monomials, so the result
 * is unique and an identity holds iff its normal form is zero.
 */
inline Polynomial extended_normal_form(const Polynomial& p) {
    using detail::fraction;
    using detail::var;
    const Polynomial alpha = var(Variable::Alpha);
    const Polynomial beta2 = var(Variable::Beta2);
    const Polynomial beta3 = var(Variable::Beta3);
    const Polynomial k2 = var(Variable::K2);
    const Polynomial k3 = var(Variable::K3);
    const Polynomial w = var(Variable::W);
    const Polynomial kappa = var(Variable::Kappa);
    const Polynomial c = var(Variable::C);

    Polynomial q = substitute(p, Variable::U, fraction(2, 9) * (var(Variable::D2) + var(Variable::D3)));
    q = substitute(q, Variable::D2, beta2 * (k2 + fraction(3, 2) * alpha));
    q = substitute(q, Variable::D3, beta3 * (k3 + fraction(3, 2) * alpha));
    q = substitute(q, Variable::Beta3, w - beta2);
    q = substitute(q, Variable::K3, fraction(9, 2) * alpha - k2);
    q = pseudo_remainder(q, k2 * k2 - fraction(9, 2) * alpha * k2 + kappa, Variable::K2);
    q = pseudo_remainder(q, beta2 * beta2 - w * beta2 - kappa - c, Variable::Beta2);
    return q;
}

/// D on the extended ring: e1 acting on alpha, kappa, c, u, w, beta_i, k_i.
inline DerivationTable extended_derivation(const SystemSpec& spec) {
    using detail::fraction;
    using detail::var;
    DerivationTable table = spec.derivation;
    const Polynomial alpha = var(Variable::Alpha);
    const Polynomial c = var(Variable::C);
    const Polynomial beta2 = var(Variable::Beta2);
    const Polynomial beta3 = var(Variable::Beta3);
    table[index_of(Variable::Beta2)] = beta2 * beta2 + c - fraction(3, 2) * alpha * var(Variable::K2);
    table[index_of(Variable::Beta3)] = beta3 * beta3 + c - fraction(3, 2) * alpha * var(Variable::K3);
    table[index_of(Variable::K2)] = var(Variable::D2);
    table[index_of(Variable::K3)] = var(Variable::D3);
    return table;
}

struct IdentityResult {
    std::string id;
    std::string name;
    bool passed = false;
    Polynomial difference;
};

struct IdentityReport {
    std::vector<IdentityResult> items;

    bool all_passed() const {
        for (const auto& item : items) {
            if (!item.passed) {
                return false;
            }
        }
        return !items.empty();
    }
};

/**
 * Checks the intermediate relations of the derivation as exact polynomial
 * identities. Base items live in Q[alpha, kappa, c, u, w]; the extended items
 * use `extended_normal_form`.
 */
inline IdentityReport check_identities(const SystemSpec& spec, bool extended) {
    using detail::fraction;
    using detail::var;
    const Polynomial alpha = var(Variable::Alpha);
    const Polynomial kappa = var(Variable::Kappa);
    const Polynomial c = var(Variable::C);
    const Polynomial u = var(Variable::U);
    const Polynomial w = var(Variable::W);
    const Polynomial beta2 = var(Variable::Beta2);
    const Polynomial beta3 = var(Variable::Beta3);
    const Polynomial k2 = var(Variable::K2);
    const Polynomial k3 = var(Variable::K3);
    const Polynomial d2 = var(Variable::D2);
    const Polynomial d3 = var(Variable::D3);
    const PrincipalCurvatureData curv = principal_curvature_data();

    IdentityReport report;
    auto record = [&](std::string id, std::string name, const Polynomial& difference) {
        report.items.push_back({std::move(id), std::move(name), difference.is_zero(), difference});
    };

    record("i", "|A|^2 = 45/2 a^2 - 2k",
           extended_normal_form(curv.k1 * curv.k1 + k2 * k2 + k3 * k3 - curv.norm_A_squared));
    record("ii", "A1 + |A|^2 = A2", spec.a1 + curv.norm_A_squared - spec.a2);
    record("iii", "7/3 A1 + (4k + 5c - 9a^2) = A2",
           fraction(7, 3) * spec.a1 + (4L * kappa + 5L * c - 9L * alpha * alpha) - spec.a2);
    record("D(C1)", "D(C1) = C2 mod C1", reduce_uw(spec, apply_derivation(spec, spec.constraints[0])) - spec.constraints[1]);

    if (!extended) {
        return report;
    }
    const Polynomial three_halves_alpha = fraction(3, 2) * alpha;
    const DerivationTable ext = extended_derivation(spec);

    record("iv", "b2*k2 + b3*k3 = 9/2 u - 3/2 a w",
           extended_normal_form(beta2 * k2 + beta3 * k3 - (fraction(9, 2) * u - three_halves_alpha * w)));
    record("v", "b2*k3 + b3*k2 = 6 a w - 9/2 u",
           extended_normal_form(beta2 * k3 + beta3 * k2 - (6L * alpha * w - fraction(9, 2) * u)));
    record("vi", "d2*k3 + d3*k2 = D(k)",
           extended_normal_form(d2 * k3 + d3 * k2 - *spec.derivation[index_of(Variable::Kappa)]));
    record("vii", "D(b2) + D(b3) = D(w)",
           extended_normal_form(*ext[index_of(Variable::Beta2)] + *ext[index_of(Variable::Beta3)] -
                                *spec.derivation[index_of(Variable::W)]));

    auto second_derivative = [&](const Polynomial& beta, const Polynomial& k_self, const Polynomial& k_other) {
        const Polynomial expansion = apply_derivation(ext, beta * (k_self + three_halves_alpha));
        const Polynomial stated = fraction(21, 2) * beta * u + 2L * (kappa + c) * (k_other + three_halves_alpha) +
                                  (c - three_halves_alpha * k_self) * (k_self + three_halves_alpha);
        return extended_normal_form(expansion - stated);
    };
    record("viii", "D(d2) = 21/2 b2 u + 2(k + c)(k3 + 3/2 a) + (c - 3/2 a k2)(k2 + 3/2 a)",
           second_derivative(beta2, k2, k3));
    record("viii-k3", "D(d3) = 21/2 b3 u + 2(k + c)(k2 + 3/2 a) + (c - 3/2 a k3)(k3 + 3/2 a)",
           second_derivative(beta3, k3, k2));
    return report;
}

/**
 * Second H-tensional equation restricted to the grad(alpha) direction:
 * (m/4) grad(alpha^2) + A grad(alpha) = 0 forces the eigenvalue of A along
 * grad(alpha) to be -(m/2) alpha.
 */
inline bool htensional_characterization(int m, const Polynomial& alpha, const Polynomial& gradient_eigenvalue) {
    return gradient_eigenvalue == detail::fraction(-m, 2) * alpha;
}

}  // namespace htv::geom

#endif  // HTV_GEOMSYS_IDENTITIES_HPP
