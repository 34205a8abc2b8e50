#ifndef HTV_CLI_OPTIONS_HPP
#define HTV_CLI_OPTIONS_HPP

#include <ostream>
#include <string>

#include "CLI11.hpp"

#include "htv/cli/run.hpp"

namespace htv::cli {

namespace detail {

inline Rational parse_c_value(const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw ParseError("--c: " + std::string(e.what()), e.position());
    }
}

}  // namespace detail

/**
 * Parses argv, runs the command and emits the report.
 * Returns 0 on pass, 1 on a verification mismatch, 2 on usage or input errors.
 */
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of the H-tensional hypersurface computations"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    bool json = false;
    std::string out_path;
    app.add_flag("--json", json, "Emit JSON instead of text");
    app.add_option("--out", out_path, "Write the report to PATH (atomically)");
    app.add_flag("--timing", config.timing, "Report wall-clock timing_ms (otherwise 0)");

    std::string fixture;
    auto add_fixture = [&](CLI::App* sub) {
        sub->add_option("--fixture", fixture, "Key polynomial fixture file");
    };

    CLI::App* identities = app.add_subcommand("identities", "Check the intermediate identities exactly");
    identities->add_flag("--extended", config.extended, "Include the items needing the extended ring");

    CLI::App* derive_key = app.add_subcommand("derive-key", "Derive the key polynomial and compare with the fixture");
    add_fixture(derive_key);

    std::string method = "sylvester";
    std::string c_text;
    CLI::App* eliminate = app.add_subcommand("eliminate", "Eliminate kappa between P and its total alpha-derivative");
    eliminate->add_option("--method", method, "sylvester | stepwise")
        ->check(CLI::IsMember({"sylvester", "stepwise"}))
        ->capture_default_str();
    eliminate->add_option("--c", c_text, "Rational value of c, or 'symbolic'")->default_str("symbolic");
    add_fixture(eliminate);

    std::string branch = "a4";
    CLI::App* degenerate = app.add_subcommand("degenerate", "Restrict P to the A4 = 0 or A5 = 0 branch");
    degenerate->add_option("--branch", branch, "a4 | a5")->required()->check(CLI::IsMember({"a4", "a5"}));
    degenerate->add_option("--c", c_text, "Optional rational value of c");
    add_fixture(degenerate);

    CLI::App* oracle = app.add_subcommand("oracle", "Numeric cross-check on sampled variety points");
    oracle->add_option("--samples", config.samples, "Number of samples")->capture_default_str();
    oracle->add_option("--seed", config.seed, "Random seed")->capture_default_str();
    oracle->add_option("--tol", config.tolerance, "Relative tolerance")->capture_default_str();
    add_fixture(oracle);

    CLI::App* roots = app.add_subcommand("roots", "Isolate real alpha-roots of the eliminant at fixed c");
    roots->add_option("--c", c_text, "Rational value of c")->required();
    add_fixture(roots);

    std::string flow_branch = "+";
    CLI::App* flow = app.add_subcommand("flow", "Integrate the derivation flow from a variety point");
    flow->add_option("--alpha", config.alpha, "Start alpha")->required();
    flow->add_option("--kappa", config.kappa, "Start kappa")->required();
    flow->add_option("--c", config.c_numeric, "Ambient curvature c")->required();
    flow->add_option("--branch", flow_branch, "Sign of w: + | -")->check(CLI::IsMember({"+", "-"}))->capture_default_str();
    flow->add_option("--t-end", config.t_end, "Final time")->capture_default_str();
    flow->add_option("--step", config.step, "RK4 step")->capture_default_str();
    add_fixture(flow);

    CLI::App* verify_all = app.add_subcommand("verify-all", "identities, derive-key, eliminate, degenerate, oracle");
    add_fixture(verify_all);
    verify_all->add_option("--samples", config.samples, "Oracle samples")->capture_default_str();
    verify_all->add_option("--seed", config.seed, "Oracle seed")->capture_default_str();
    verify_all->add_option("--tol", config.tolerance, "Oracle tolerance")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        config.command = app.get_subcommands().front()->get_name();
        config.format = json ? Format::Json : Format::Text;
        if (!out_path.empty()) {
            config.out = out_path;
        }
        if (!fixture.empty()) {
            config.fixture = fixture;
        }
        config.method = method == "stepwise" ? elim::Method::Stepwise : elim::Method::Sylvester;
        config.branch = branch == "a5" ? elim::Branch::A5 : elim::Branch::A4;
        config.flow_branch = flow_branch == "-" ? -1 : 1;
        if (!c_text.empty() && c_text != "symbolic") {
            config.c = detail::parse_c_value(c_text);
        }
        if (c_text == "symbolic" && config.command != "eliminate") {
            throw Error("--c symbolic is only accepted by eliminate");
        }
        const Report report = run(config);
        emit(report, config.format, config.out, out);
        return report.exit_code();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace htv::cli

#endif  // HTV_CLI_OPTIONS_HPP
