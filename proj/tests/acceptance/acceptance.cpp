// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--known-failing N[,N...]]
//
// Exit status is 0 when every criterion passes, except those listed as known
// failing, which must fail. A listed criterion that starts passing is
// reported and also makes the run exit nonzero.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "oracles.hpp"
#include "htv/eliminate/elimination.hpp"
#include "htv/geomsys/identities.hpp"
#include "htv/geomsys/key_polynomial.hpp"
#include "htv/numcheck/flow.hpp"
#include "htv/numcheck/oracle.hpp"
#include "htv/numcheck/roots.hpp"
#include "htv/symcore/division.hpp"
#include "htv/symcore/resultant.hpp"

using namespace htv;
using htv::testing::Generator;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double time_limit_s;
    std::function<Outcome()> check;
};

Polynomial key_polynomial() {
    return geom::load_key_polynomial(std::string(HTV_SOURCE_DATA_DIR) + "/" + geom::kKeyPolynomialFile);
}

const Polynomial a = Polynomial::variable(Variable::Alpha);
const Polynomial c = Polynomial::variable(Variable::C);

Outcome key_polynomial_reproduction() {
    const geom::KeyPolynomialReport key = geom::derive_key_polynomial(geom::system_spec(), key_polynomial());
    int agreeing = 0;
    for (const auto& pair : key.coefficient_table) {
        agreeing += pair.computed == key.lambda * pair.expected;
    }
    const bool passed = key.match && agreeing == 15 && key.coefficient_table.size() == 15;
    return {passed, std::to_string(agreeing) + "/15 coefficients exact, lambda = " + to_string(key.lambda) +
                        ", factor " + canonical_text(key.extracted_factor)};
}

Outcome identity_suite() {
    const geom::IdentityReport report = geom::check_identities(geom::system_spec(), true);
    std::string failing;
    int passed = 0;
    for (const auto& item : report.items) {
        if (item.passed) {
            ++passed;
        } else {
            failing += " " + item.id;
        }
    }
    return {report.all_passed(), std::to_string(passed) + "/" + std::to_string(report.items.size()) +
                                     " exact zero differences" + (failing.empty() ? "" : ", failing:" + failing)};
}

Outcome degree_claim() {
    const int degree = elim::total_alpha_derivative(key_polynomial()).degree(Variable::Kappa);
    return {degree == 5, "deg_kappa Q = " + std::to_string(degree) + " (expected 5)"};
}

Outcome nontrivial_eliminant() {
    const Polynomial p = key_polynomial();
    const elim::EliminationReport report =
        elim::eliminate_kappa(p, elim::total_alpha_derivative(p), elim::Method::Sylvester);
    bool passed = report.eliminant_nonzero && !report.eliminant.depends_on(Variable::Kappa);
    std::ostringstream detail;
    detail << "Res nonzero (" << report.eliminant.size() << " terms, alpha-degree " << report.deg_alpha_eliminant
           << ")";
    for (long value : {-1L, 0L, 1L}) {
        const elim::Specialization s = elim::specialize(report, Rational(value));
        passed = passed && s.nonzero;
        detail << "; c=" << value << (s.nonzero ? " nonzero" : " ZERO");
        if (value == 0) {
            const auto roots = num::isolate_real_roots(s.polynomial);
            const bool only_zero = roots.size() == 1 && roots[0].lower < 0 && sgn(roots[0].upper) == 0;
            passed = passed && s.monomial && only_zero;
            detail << (s.monomial ? " monomial a^" + std::to_string(s.degree) : " not monomial")
                   << (only_zero ? ", only root 0" : ", other roots");
        }
    }
    return {passed, detail.str()};
}

Outcome degenerate_branches() {
    const Polynomial p = key_polynomial();
    const elim::DegenerateBranchReport a5 = elim::degenerate_branch(elim::Branch::A5, p);
    const elim::DegenerateBranchReport a4 = elim::degenerate_branch(elim::Branch::A4, p);
    const bool values = a5.kappa_value == Rational(441, 26) * a * a - Rational(15, 13) * c &&
                        a4.kappa_value == Rational(216, 13) * a * a - Rational(31, 26) * c;
    const bool passed = values && a5.nonzero && a4.nonzero && a5.degree_in_alpha == 8 && a4.degree_in_alpha == 8 &&
                        a5.branch_residual.is_zero() && a4.branch_residual.is_zero();
    return {passed, "A5 branch alpha-degree " + std::to_string(a5.degree_in_alpha) + ", A4 branch alpha-degree " +
                        std::to_string(a4.degree_in_alpha) + (values ? "" : ", unexpected kappa values")};
}

Outcome oracle_concordance() {
    constexpr double kTolerance = 1e-9;
    const Polynomial p = key_polynomial();
    const geom::KeyPolynomialReport key = geom::derive_key_polynomial(geom::system_spec(), p);
    const num::OracleReport oracle = num::numeric_reduction_oracle(100, 42, kTolerance, key, p);
    double conservation = 0.0;
    for (double value : oracle.max_conservation) {
        conservation = std::max(conservation, value);
    }
    std::ostringstream detail;
    detail.precision(3);
    detail << oracle.samples << " samples: concordance " << oracle.max_concordance_deviation << ", D(C1) generic "
           << oracle.max_generic_dc1 << ", D(C1..C4) on P = 0 " << conservation << " (tol 1e-9)";
    return {oracle.passed, detail.str()};
}

Outcome flow_checks() {
    constexpr double kDriftTolerance = 1e-6;
    constexpr double kHalvingFactor = 8.0;
    const Polynomial p = key_polynomial();
    num::GridSampler sampler(42);
    double worst_drift = 0.0;
    double worst_ratio = std::numeric_limits<double>::infinity();
    double worst_error = 0.0;
    bool blew_up = false;
    int started = 0;
    while (started < 3) {
        const num::Complex alpha = sampler.complex();
        const num::Complex cc = sampler.complex();
        if (std::abs(alpha) < 1e-3) {
            continue;
        }
        const auto roots = num::kappa_roots(p, alpha, cc);
        num::StatePoint start;
        try {
            start = num::sample_variety_point(alpha, roots.front(), cc, 1);
        } catch (const DegeneratePoint&) {
            continue;
        }
        ++started;
        const num::FlowConvergenceReport flow = num::flow_convergence(start, 0.1, 1e-4, p);
        blew_up = blew_up || flow.coarse.blew_up;
        worst_drift = std::max(worst_drift, flow.coarse.worst_drift());
        worst_ratio = std::min(worst_ratio, flow.drift_ratio);
        worst_error = std::max(worst_error, flow.integration_error);
    }
    std::ostringstream detail;
    detail.precision(3);
    detail << started << " starts on C1..C4 = P = 0: max drift " << worst_drift << " (limit " << kDriftTolerance
           << "), drift ratio on halving " << worst_ratio << " (need " << kHalvingFactor
           << "); info: step-halving state difference " << worst_error;
    return {!blew_up && worst_drift <= kDriftTolerance && worst_ratio >= kHalvingFactor, detail.str()};
}

Outcome property_suites() {
    constexpr int kInstances = 1000;
    const std::vector<Variable> base = {Variable::Alpha, Variable::Kappa, Variable::C};
    const std::vector<Variable> coefficient_vars = {Variable::Alpha, Variable::C};
    using namespace htv::testing::oracle;
    int failures = 0;
    std::ostringstream detail;

    Generator gen(101);
    for (int i = 0; i < kInstances; ++i) {
        const Polynomial p = gen.polynomial(base, 4, 2);
        const Polynomial q = gen.polynomial(base, 4, 2);
        const Polynomial r = gen.polynomial(base, 4, 2);
        failures += !((p * q) * r == p * (q * r) && p * (q + r) == p * q + p * r && p * q == q * p &&
                      (p + q) + r == p + (q + r) && (p + q) - q == p);
    }
    detail << "ring laws " << kInstances;

    for (int i = 0; i < kInstances; ++i) {
        const Polynomial p = gen.polynomial(base, 5, 3);
        const Polynomial q = gen.polynomial(base, 5, 3);
        for (Variable v : base) {
            failures += partial_derivative(p * q, v) != partial_derivative(p, v) * q + p * partial_derivative(q, v);
        }
    }
    detail << ", Leibniz " << kInstances;

    for (int i = 0; i < kInstances; ++i) {
        const Polynomial p =
            gen.polynomial_in(Variable::Kappa, static_cast<int>(gen.integer(0, 5)), coefficient_vars, 3, 2);
        const Polynomial q =
            gen.polynomial_in(Variable::Kappa, static_cast<int>(gen.integer(0, 3)), coefficient_vars, 3, 2);
        const PseudoDivision division = pseudo_divide(p, q, Variable::Kappa);
        failures += division.multiplier * p != division.quotient * q + division.remainder;
        failures += q.degree(Variable::Kappa) > 0 &&
                    division.remainder.degree(Variable::Kappa) >= q.degree(Variable::Kappa);
    }
    detail << ", pseudo-division " << kInstances;

    for (int i = 0; i < kInstances; ++i) {
        const int m = static_cast<int>(gen.integer(1, 4));
        const int n = static_cast<int>(gen.integer(1, 3));
        const Polynomial p = gen.polynomial_in(Variable::Kappa, m, coefficient_vars, 2, 2);
        const Polynomial q = gen.polynomial_in(Variable::Kappa, n, coefficient_vars, 2, 2);
        const RationalPoint x = gen.point();
        const Rational expected =
            gaussian_determinant(numeric_sylvester(specialized_coefficients(p, x, m), specialized_coefficients(q, x, n)));
        failures += evaluate(resultant(p, q, Variable::Kappa), x) != expected;
    }
    detail << ", resultant vs Sylvester determinant " << kInstances;

    for (int i = 0; i < kInstances; ++i) {
        const int real_count = static_cast<int>(gen.integer(0, 6));
        std::set<long> quarters;
        while (static_cast<int>(quarters.size()) < real_count) {
            quarters.insert(gen.integer(-20, 20));
        }
        Polynomial p = Polynomial(gen.nonzero_rational());
        for (long r : quarters) {
            p *= a - Rational(r, 4);
        }
        if (real_count <= 4 && gen.integer(0, 1) == 1) {
            p *= a * a + Rational(gen.integer(1, 9), 4);
        }
        const auto roots = num::isolate_real_roots(p);
        const int scanned = sign_scan(num::to_dense(p, Variable::Alpha), -6.0, 6.0, 10000);
        failures += static_cast<int>(roots.size()) != scanned || scanned != real_count;
    }
    detail << ", Sturm vs sign scan " << kInstances << "; failures " << failures;
    return {failures == 0, detail.str()};
}

std::set<int> parse_known_failing(int argc, char** argv) {
    std::set<int> known;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--known-failing" && i + 1 < argc) {
            std::stringstream list(argv[++i]);
            std::string item;
            while (std::getline(list, item, ',')) {
                known.insert(std::stoi(item));
            }
        }
    }
    return known;
}

}  // namespace

int main(int argc, char** argv) {
    const std::set<int> known_failing = parse_known_failing(argc, argv);
    const std::vector<Criterion> criteria = {
        {1, "key polynomial reproduction", 10.0, key_polynomial_reproduction},
        {2, "identity suite", 1.0, identity_suite},
        {3, "elimination degree", 1.0, degree_claim},
        {4, "nontrivial eliminant", 60.0, nontrivial_eliminant},
        {5, "degenerate branches", 1.0, degenerate_branches},
        {6, "oracle concordance", 5.0, oracle_concordance},
        {7, "flow invariance", 5.0, flow_checks},
        {8, "property suites", 120.0, property_suites},
    };

    bool contract_held = true;
    int passed_count = 0;
    for (const auto& criterion : criteria) {
        Outcome outcome;
        const auto begin = std::chrono::steady_clock::now();
        try {
            outcome = criterion.check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("error: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
        const bool in_time = seconds <= criterion.time_limit_s;
        const bool passed = outcome.passed && in_time;
        passed_count += passed;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", seconds, criterion.time_limit_s);
        std::cout << (passed ? "PASS" : "FAIL") << "  [" << criterion.id << "] " << criterion.title << ": "
                  << outcome.detail << (in_time ? "" : " (over time limit)") << " [" << timing << "]";
        const bool known = known_failing.count(criterion.id) != 0;
        if (known && !passed) {
            std::cout << " (known failing)";
        }
        if (known && passed) {
            std::cout << " (listed as known failing but passed)";
        }
        std::cout << "\n";
        contract_held = contract_held && (passed != known);
    }
    std::cout << passed_count << "/" << criteria.size() << " criteria pass\n";
    return contract_held ? 0 : 1;
}
