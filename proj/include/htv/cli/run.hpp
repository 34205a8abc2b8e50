#ifndef HTV_CLI_RUN_HPP
#define HTV_CLI_RUN_HPP

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "htv/eliminate/elimination.hpp"
#include "htv/geomsys/identities.hpp"
#include "htv/geomsys/key_polynomial.hpp"
#include "htv/numcheck/flow.hpp"
#include "htv/numcheck/oracle.hpp"
#include "htv/numcheck/roots.hpp"

namespace htv::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json };

/// Fully resolved command line. Every field has its default here.
struct RunConfig {
    std::string command;
    bool extended = false;
    std::optional<std::string> fixture;
    elim::Method method = elim::Method::Sylvester;
    /// Empty means symbolic c.
    std::optional<Rational> c;
    elim::Branch branch = elim::Branch::A4;
    int samples = 100;
    std::uint64_t seed = 42;
    double tolerance = 1e-9;
    double alpha = 0.0;
    double kappa = 0.0;
    double c_numeric = 0.0;
    int flow_branch = 1;
    double t_end = 0.1;
    double step = 1e-4;
    Format format = Format::Text;
    std::optional<std::string> out;
    /// timing_ms stays 0 unless set.
    bool timing = false;
};

struct Report {
    std::string command;
    bool passed = false;
    Json payload = Json::object();
    /// Human-readable lines for the text format.
    std::vector<std::string> lines;
    long long timing_ms = 0;

    int exit_code() const { return passed ? 0 : 1; }
};

/// --fixture, then $HTV_FIXTURE_DIR, then the in-tree data directory.
inline std::string resolve_fixture(const RunConfig& config) {
    if (config.fixture) {
        return *config.fixture;
    }
    if (const char* dir = std::getenv("HTV_FIXTURE_DIR"); dir != nullptr && *dir != '\0') {
        return (std::filesystem::path(dir) / geom::kKeyPolynomialFile).string();
    }
    return (std::filesystem::path(HTV_SOURCE_DATA_DIR) / geom::kKeyPolynomialFile).string();
}

namespace detail {

inline const char* verdict(bool passed) { return passed ? "PASS" : "FAIL"; }

inline Json polynomial_summary(const Polynomial& p) {
    return Json{{"text", canonical_text(p)},
                {"terms", p.size()},
                {"degree_alpha", p.degree(Variable::Alpha)},
                {"nonzero", !p.is_zero()},
                {"monomial", p.size() == 1}};
}

inline Json specialization_json(const elim::Specialization& s) {
    return Json{{"c", to_string(s.c)},
                {"nonzero", s.nonzero},
                {"degree_alpha", s.degree},
                {"monomial", s.monomial},
                {"polynomial", canonical_text(s.polynomial)}};
}

inline Report run_identities(const RunConfig& config) {
    Report report;
    const geom::IdentityReport identities = geom::check_identities(geom::system_spec(), config.extended);
    Json items = Json::array();
    for (const auto& item : identities.items) {
        items.push_back(Json{{"id", item.id},
                             {"name", item.name},
                             {"pass", item.passed},
                             {"difference", canonical_text(item.difference)}});
        report.lines.push_back(std::string(verdict(item.passed)) + "  (" + item.id + ")  " + item.name);
    }
    report.payload["extended"] = config.extended;
    report.payload["identities"] = items;
    report.passed = identities.all_passed();
    return report;
}

inline Report run_derive_key(const RunConfig& config) {
    Report report;
    const Polynomial fixture = geom::load_key_polynomial(resolve_fixture(config));
    const geom::KeyPolynomialReport key = geom::derive_key_polynomial(geom::system_spec(), fixture);
    Json coefficients = Json::array();
    for (const auto& pair : key.coefficient_table) {
        const bool agrees = pair.computed == key.lambda * pair.expected;
        coefficients.push_back(Json{{"monomial", pair.monomial},
                                    {"fixture", to_string(pair.expected)},
                                    {"computed", to_string(pair.computed)},
                                    {"agrees", agrees}});
        report.lines.push_back(std::string(verdict(agrees)) + "  " + pair.monomial + "  fixture " + to_string(pair.expected) +
                               "  computed " + to_string(pair.computed));
    }
    report.payload["lambda"] = to_string(key.lambda);
    report.payload["extracted_factor"] = canonical_text(key.extracted_factor);
    report.payload["clearing_multiplier"] = canonical_text(key.clearing_multiplier);
    report.payload["match"] = key.match;
    report.payload["terms"] = fixture.size();
    report.payload["coefficients"] = coefficients;
    if (key.first_mismatch) {
        report.payload["first_mismatch"] = Json{{"monomial", key.first_mismatch->monomial},
                                                {"fixture", to_string(key.first_mismatch->expected)},
                                                {"computed", to_string(key.first_mismatch->computed)}};
        report.lines.push_back("first mismatch at " + key.first_mismatch->monomial);
    } else {
        report.payload["first_mismatch"] = nullptr;
    }
    report.lines.push_back("lambda = " + to_string(key.lambda) + ", factor " + canonical_text(key.extracted_factor));
    report.passed = key.match;
    return report;
}

inline Report run_eliminate(const RunConfig& config) {
    Report report;
    const Polynomial p = geom::load_key_polynomial(resolve_fixture(config));
    const Polynomial q = elim::total_alpha_derivative(p);
    const elim::EliminationReport elimination = elim::eliminate_kappa(p, q, config.method);

    std::vector<elim::Specialization> specializations;
    if (config.c) {
        specializations.push_back(elim::specialize(elimination, *config.c));
    } else {
        for (long value : {-1L, 0L, 1L}) {
            specializations.push_back(elim::specialize(elimination, Rational(value)));
        }
    }
    bool passed = q.degree(Variable::Kappa) == 5 && elimination.eliminant_nonzero && !elimination.subresultant_fallback;
    report.lines.push_back(std::string(verdict(q.degree(Variable::Kappa) == 5)) +
                           "  deg_kappa Q = " + std::to_string(q.degree(Variable::Kappa)));
    report.lines.push_back(std::string(verdict(elimination.eliminant_nonzero)) + "  eliminant nonzero, " +
                           std::to_string(elimination.eliminant.size()) + " terms, alpha-degree " +
                           std::to_string(elimination.deg_alpha_eliminant));
    Json specs = Json::array();
    for (const auto& s : specializations) {
        bool ok = s.nonzero;
        if (sgn(s.c) == 0) {
            ok = ok && s.monomial;
        }
        passed = passed && ok;
        specs.push_back(specialization_json(s));
        report.lines.push_back(std::string(verdict(ok)) + "  c = " + to_string(s.c) + ": " +
                               (s.monomial ? "monomial " + canonical_text(s.polynomial)
                                           : "alpha-degree " + std::to_string(s.degree)));
    }
    Json steps = Json::array();
    for (const auto& step : elimination.steps) {
        steps.push_back(Json{{"kappa_degree", step.kappa_degree}, {"terms", step.terms}, {"divisor_terms", step.divisor_terms}});
    }
    report.payload["method"] = std::string(elim::to_string(config.method));
    report.payload["c"] = config.c ? to_string(*config.c) : "symbolic";
    report.payload["deg_kappa_q"] = q.degree(Variable::Kappa);
    report.payload["subresultant_fallback"] = elimination.subresultant_fallback;
    report.payload["eliminant"] = polynomial_summary(elimination.eliminant);
    report.payload["steps"] = steps;
    report.payload["specializations"] = specs;
    report.passed = passed;
    return report;
}

inline Report run_degenerate(const RunConfig& config) {
    Report report;
    const Polynomial p = geom::load_key_polynomial(resolve_fixture(config));
    const elim::DegenerateBranchReport branch = elim::degenerate_branch(config.branch, p);
    bool passed = branch.branch_residual.is_zero() && branch.nonzero && branch.degree_in_alpha == 8;
    report.payload["branch"] = std::string(elim::to_string(config.branch));
    report.payload["kappa"] = canonical_text(branch.kappa_value);
    report.payload["branch_residual_zero"] = branch.branch_residual.is_zero();
    report.payload["restricted"] = polynomial_summary(branch.restricted);
    report.lines.push_back("kappa = " + canonical_text(branch.kappa_value));
    report.lines.push_back(std::string(verdict(passed)) + "  restricted polynomial nonzero of alpha-degree " +
                           std::to_string(branch.degree_in_alpha));
    if (config.c) {
        const Polynomial specialized = substitute(branch.restricted, Variable::C, *config.c);
        const bool ok = !specialized.is_zero();
        passed = passed && ok;
        report.payload["specialization"] =
            Json{{"c", to_string(*config.c)}, {"polynomial", polynomial_summary(specialized)}};
        report.lines.push_back(std::string(verdict(ok)) + "  c = " + to_string(*config.c) + ": " +
                               canonical_text(specialized));
    }
    report.passed = passed;
    return report;
}

inline Report run_oracle(const RunConfig& config) {
    if (config.samples < 1) {
        throw DegenerateInput("oracle: --samples must be at least 1");
    }
    Report report;
    const Polynomial p = geom::load_key_polynomial(resolve_fixture(config));
    const geom::KeyPolynomialReport key = geom::derive_key_polynomial(geom::system_spec(), p);
    const num::OracleReport oracle =
        num::numeric_reduction_oracle(config.samples, config.seed, config.tolerance, key, p);
    report.payload["samples"] = oracle.samples;
    report.payload["seed"] = oracle.seed;
    report.payload["tol"] = oracle.tolerance;
    report.payload["attempts"] = oracle.attempts;
    report.payload["max_rel_dev"] = oracle.max_concordance_deviation;
    report.payload["max_lambda_dev"] = oracle.max_lambda_deviation;
    report.payload["max_generic_dC1"] = oracle.max_generic_dc1;
    Json conservation = Json::object();
    for (std::size_t i = 0; i < 4; ++i) {
        conservation["dC" + std::to_string(i + 1)] = oracle.max_conservation[i];
    }
    report.payload["max_conservation"] = conservation;
    report.payload["max_key_residual"] = oracle.max_key_residual;
    report.payload["max_sample_residual"] = oracle.max_sample_residual;
    report.payload["pass"] = oracle.passed;
    std::ostringstream line;
    line << verdict(oracle.passed) << "  " << oracle.samples << " samples, max relative deviation "
         << oracle.max_concordance_deviation;
    report.lines.push_back(line.str());
    report.passed = oracle.passed;
    return report;
}

inline Report run_roots(const RunConfig& config) {
    if (!config.c) {
        throw DegenerateInput("roots: --c is required");
    }
    Report report;
    const Polynomial p = geom::load_key_polynomial(resolve_fixture(config));
    const elim::EliminationReport elimination =
        elim::eliminate_kappa(substitute(p, Variable::C, *config.c),
                              substitute(elim::total_alpha_derivative(p), Variable::C, *config.c),
                              elim::Method::Sylvester);
    report.payload["c"] = to_string(*config.c);
    report.payload["eliminant"] = polynomial_summary(elimination.eliminant);
    if (elimination.eliminant.is_zero() || elimination.eliminant.depends_on(Variable::Kappa)) {
        report.payload["roots"] = Json::array();
        report.lines.push_back("FAIL  eliminant vanishes at c = " + to_string(*config.c));
        report.passed = false;
        return report;
    }
    Json roots = Json::array();
    int positive = 0;
    for (const auto& root : num::isolate_real_roots(elimination.eliminant)) {
        roots.push_back(Json{{"lower", to_string(root.lower)},
                             {"upper", to_string(root.upper)},
                             {"midpoint", root.midpoint()},
                             {"sign_change", root.sign_change}});
        if (root.lower >= 0) {
            ++positive;
        }
        std::ostringstream line;
        line.precision(12);
        line << "root in (" << root.lower.get_d() << ", " << root.upper.get_d() << "]";
        report.lines.push_back(line.str());
    }
    report.payload["roots"] = roots;
    report.payload["positive_roots"] = positive;
    report.lines.push_back("PASS  " + std::to_string(roots.size()) + " real roots, " + std::to_string(positive) +
                           " positive");
    report.passed = true;
    return report;
}

inline Json state_json(const num::StatePoint& s) {
    auto z = [](num::Complex v) { return Json::array({v.real(), v.imag()}); };
    return Json{{"alpha", z(s.alpha)}, {"kappa", z(s.kappa)}, {"c", z(s.c)}, {"u", z(s.u)}, {"w", z(s.w)}};
}

inline constexpr double kFlowDriftTolerance = 1e-6;
inline constexpr double kFlowHalvingFactor = 8.0;

inline Report run_flow(const RunConfig& config) {
    Report report;
    const Polynomial p = geom::load_key_polynomial(resolve_fixture(config));
    const num::StatePoint start = num::sample_variety_point(config.alpha, config.kappa, config.c_numeric,
                                                            config.flow_branch);
    const num::FlowConvergenceReport flow = num::flow_convergence(start, config.t_end, config.step, p);
    Json drift = Json::object();
    Json drift_half = Json::object();
    for (const auto& [name, value] : flow.coarse.max_drift) {
        drift[name] = value;
    }
    for (const auto& [name, value] : flow.medium.max_drift) {
        drift_half[name] = value;
    }
    const bool drift_ok = flow.coarse.worst_drift() <= kFlowDriftTolerance;
    const bool halving_ok = flow.coarse.worst_drift() == 0.0 || flow.drift_ratio >= kFlowHalvingFactor;
    const bool passed = !flow.coarse.blew_up && drift_ok && halving_ok;
    report.payload["t_end"] = config.t_end;
    report.payload["step"] = config.step;
    report.payload["start"] = state_json(start);
    report.payload["max_drift"] = drift;
    report.payload["blowup"] = flow.coarse.blew_up;
    report.payload["blowup_time"] = flow.coarse.blowup_time;
    report.payload["steps_taken"] = flow.coarse.steps_taken;
    report.payload["max_drift_half_step"] = drift_half;
    report.payload["drift_ratio"] = flow.drift_ratio;
    report.payload["integration_error"] = flow.integration_error;
    report.payload["order_ratio"] = flow.order_ratio;
    report.payload["final"] = state_json(flow.coarse.trajectory.back());
    std::ostringstream line;
    line << verdict(drift_ok) << "  max drift " << flow.coarse.worst_drift() << " (limit " << kFlowDriftTolerance << ")";
    report.lines.push_back(line.str());
    line.str("");
    line << verdict(halving_ok) << "  drift ratio on halving " << flow.drift_ratio << " (need " << kFlowHalvingFactor
         << ")";
    report.lines.push_back(line.str());
    line.str("");
    line << "integration error " << flow.integration_error << ", order ratio " << flow.order_ratio
         << (flow.coarse.blew_up ? ", blew up" : "");
    report.lines.push_back(line.str());
    report.passed = passed;
    return report;
}

}  // namespace detail

inline Report run(const RunConfig& config);

namespace detail {

inline Report run_verify_all(const RunConfig& config) {
    Report report;
    Json stages = Json::array();
    bool passed = true;
    auto stage = [&](RunConfig sub) {
        sub.timing = false;
        const Report r = run(sub);
        passed = passed && r.passed;
        stages.push_back(Json{{"command", r.command}, {"status", r.passed ? "pass" : "fail"}, {"payload", r.payload}});
        report.lines.push_back(std::string(verdict(r.passed)) + "  " + r.command);
    };
    RunConfig sub = config;
    sub.command = "identities";
    sub.extended = true;
    stage(sub);
    sub = config;
    sub.command = "derive-key";
    stage(sub);
    sub = config;
    sub.command = "eliminate";
    sub.method = elim::Method::Sylvester;
    sub.c.reset();
    stage(sub);
    for (elim::Branch b : {elim::Branch::A4, elim::Branch::A5}) {
        sub = config;
        sub.command = "degenerate";
        sub.branch = b;
        sub.c.reset();
        stage(sub);
    }
    sub = config;
    sub.command = "oracle";
    stage(sub);
    report.payload["stages"] = stages;
    report.passed = passed;
    return report;
}

}  // namespace detail

/// Executes the configured command. Library errors propagate to the caller.
inline Report run(const RunConfig& config) {
    const auto begin = std::chrono::steady_clock::now();
    Report report;
    if (config.command == "identities") {
        report = detail::run_identities(config);
    } else if (config.command == "derive-key") {
        report = detail::run_derive_key(config);
    } else if (config.command == "eliminate") {
        report = detail::run_eliminate(config);
    } else if (config.command == "degenerate") {
        report = detail::run_degenerate(config);
    } else if (config.command == "oracle") {
        report = detail::run_oracle(config);
    } else if (config.command == "roots") {
        report = detail::run_roots(config);
    } else if (config.command == "flow") {
        report = detail::run_flow(config);
    } else if (config.command == "verify-all") {
        report = detail::run_verify_all(config);
    } else {
        throw Error("unknown command '" + config.command + "'");
    }
    report.command = config.command;
    if (config.timing) {
        report.timing_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - begin).count();
    }
    return report;
}

inline std::string render(const Report& report, Format format) {
    if (format == Format::Json) {
        const Json document{{"command", report.command},
                            {"status", report.passed ? "pass" : "fail"},
                            {"timing_ms", report.timing_ms},
                            {"payload", report.payload}};
        return document.dump(2) + "\n";
    }
    std::string text = report.command + ": " + (report.passed ? "pass" : "fail") + "\n";
    for (const auto& line : report.lines) {
        text += "  " + line + "\n";
    }
    return text;
}

/// Writes the rendered report to `path` (temp file + rename) or to `out`.
/// Throws Error when the path cannot be written.
inline void emit(const Report& report, Format format, const std::optional<std::string>& path, std::ostream& out) {
    const std::string text = render(report, format);
    if (!path) {
        out << text;
        return;
    }
    const std::filesystem::path target(*path);
    std::filesystem::path temporary = target;
    temporary += ".tmp";
    {
        std::ofstream file(temporary, std::ios::binary | std::ios::trunc);
        if (!file || !(file << text) || !file.flush()) {
            throw Error("cannot write report to '" + *path + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(temporary, target, ec);
    if (ec) {
        std::filesystem::remove(temporary, ec);
        throw Error("cannot write report to '" + *path + "'");
    }
}

}  // namespace htv::cli

#endif  // HTV_CLI_RUN_HPP
