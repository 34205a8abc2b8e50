#ifndef HTV_ELIMINATE_ELIMINATION_HPP
#define HTV_ELIMINATE_ELIMINATION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "htv/error.hpp"
#include "htv/geomsys/system.hpp"
#include "htv/symcore/division.hpp"
#include "htv/symcore/resultant.hpp"

namespace htv::elim {

/**
 * Clears the denominator alpha*A5 from the total alpha-derivative of P along
 * the flow, using dk/dalpha = A3 A4 / (alpha A5) - (27/4) alpha:
 *
 *     Q = alpha A5 dP/dalpha + (A3 A4 - (27/4) alpha^2 A5) dP/dkappa
 */
inline Polynomial total_alpha_derivative(const Polynomial& p, const geom::SystemSpec& spec = geom::system_spec()) {
    const Polynomial alpha = Polynomial::variable(Variable::Alpha);
    Rational slope(27, 4);
    const Polynomial kappa_slope = spec.a3 * spec.a4 - slope * alpha * alpha * spec.a5;
    return alpha * spec.a5 * partial_derivative(p, Variable::Alpha) +
           kappa_slope * partial_derivative(p, Variable::Kappa);
}

enum class Method { Sylvester, Stepwise };

inline std::string_view to_string(Method m) { return m == Method::Sylvester ? "sylvester" : "stepwise"; }

/// Record of one stepwise elimination step.
struct EliminationStep {
    int kappa_degree = 0;
    std::size_t terms = 0;
    std::size_t divisor_terms = 0;
};

struct Specialization {
    Rational c;
    Polynomial polynomial;
    int degree = -1;
    bool nonzero = false;
    bool monomial = false;
};

struct EliminationReport {
    Polynomial p;
    Polynomial q;
    Method method = Method::Sylvester;
    Polynomial eliminant;
    bool eliminant_nonzero = false;
    int deg_kappa_q = 0;
    int deg_alpha_eliminant = -1;
    /// Set when the resultant vanished and the last nonzero subresultant
    /// was reported instead.
    bool subresultant_fallback = false;
    std::vector<EliminationStep> steps;
    std::vector<Specialization> specializations;
};

/**
 * Eliminates kappa between P and Q.
 *
 * Sylvester: Res_kappa(P, Q) by fraction-free Bareiss elimination.
 * Stepwise: subresultant PRS. Pseudo-remainders eliminating kappa^5,
 * kappa^4, ... in turn, each divided exactly by its Brown-Collins factor.
 * The kappa-free end of the chain is returned without rational content.
 *
 * Throws DegenerateInput if P and Q are both kappa-free.
 */
inline EliminationReport eliminate_kappa(const Polynomial& p, const Polynomial& q, Method method) {
    if (!p.depends_on(Variable::Kappa) && !q.depends_on(Variable::Kappa)) {
        throw DegenerateInput("eliminate_kappa: neither polynomial depends on kappa");
    }
    EliminationReport report;
    report.p = p;
    report.q = q;
    report.method = method;
    report.deg_kappa_q = q.degree(Variable::Kappa);

    if (method == Method::Sylvester) {
        report.eliminant = resultant(p, q, Variable::Kappa);
        if (report.eliminant.is_zero()) {
            const SubresultantChain chain = subresultant_chain(p, q, Variable::Kappa);
            report.eliminant = chain.last_nonzero;
            report.subresultant_fallback = true;
        }
    } else {
        // kappa^5 is removed between Q and P first.
        const bool q_first = q.degree(Variable::Kappa) >= p.degree(Variable::Kappa);
        const SubresultantChain chain =
            q_first ? subresultant_chain(q, p, Variable::Kappa) : subresultant_chain(p, q, Variable::Kappa);
        for (std::size_t i = 2; i < chain.sequence.size(); ++i) {
            report.steps.push_back({chain.sequence[i].degree(Variable::Kappa), chain.sequence[i].size(),
                                    chain.divisors[i - 2].size()});
        }
        report.eliminant = primitive_integer_part(chain.last_nonzero);
        report.subresultant_fallback = chain.last_nonzero.depends_on(Variable::Kappa);
    }
    report.eliminant_nonzero = !report.eliminant.is_zero();
    report.deg_alpha_eliminant = report.eliminant.degree(Variable::Alpha);
    return report;
}

/// Substitutes c <- value into the eliminant.
inline Specialization specialize(const EliminationReport& report, const Rational& c_value) {
    Specialization s;
    s.c = c_value;
    s.polynomial = substitute(report.eliminant, Variable::C, c_value);
    s.degree = s.polynomial.degree(Variable::Alpha);
    s.nonzero = !s.polynomial.is_zero();
    s.monomial = s.polynomial.size() == 1;
    return s;
}

enum class Branch { A4, A5 };

inline std::string_view to_string(Branch b) { return b == Branch::A4 ? "A4" : "A5"; }

struct DegenerateBranchReport {
    Branch branch = Branch::A4;
    /// kappa solving the branch equation, in {alpha, c}.
    Polynomial kappa_value;
    /// P(alpha, kappa_value, c), primitive with integer coefficients.
    Polynomial restricted;
    int degree_in_alpha = -1;
    bool nonzero = false;
    /// The branch coefficient after substitution; must be zero.
    Polynomial branch_residual;
};

/**
 * On A4 = 0 or A5 = 0 the coefficient is linear in kappa; solve it, substitute
 * into P, and clear denominators to integer content.
 */
inline DegenerateBranchReport degenerate_branch(Branch branch, const Polynomial& p,
                                                const geom::SystemSpec& spec = geom::system_spec()) {
    const Polynomial& coefficient = branch == Branch::A4 ? spec.a4 : spec.a5;
    const Polynomial slope = coefficient.coefficient(Variable::Kappa, 1);
    const Polynomial rest = coefficient.coefficient(Variable::Kappa, 0);

    DegenerateBranchReport report;
    report.branch = branch;
    report.kappa_value = -rest * (Rational(1) / slope.constant_term());
    report.branch_residual = substitute(coefficient, Variable::Kappa, report.kappa_value);
    report.restricted = primitive_integer_part(substitute(p, Variable::Kappa, report.kappa_value));
    report.degree_in_alpha = report.restricted.degree(Variable::Alpha);
    report.nonzero = !report.restricted.is_zero();
    return report;
}

}  // namespace htv::elim

#endif  // HTV_ELIMINATE_ELIMINATION_HPP
