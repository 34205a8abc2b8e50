#ifndef HTV_NUMCHECK_ORACLE_HPP
#define HTV_NUMCHECK_ORACLE_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <random>

#include "htv/geomsys/key_polynomial.hpp"
#include "htv/numcheck/variety.hpp"

namespace htv::num {

/// Deterministic sampler: raw mt19937_64 outputs mapped to {-2.00, -1.99, ..., 2.00}.
class GridSampler {
public:
    explicit GridSampler(std::uint64_t seed) : engine_(seed) {}

    double real() { return static_cast<double>(static_cast<int>(engine_() % 401) - 200) / 100.0; }
    Complex complex() {
        const double re = real();
        return {re, real()};
    }
    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

struct OracleReport {
    int samples = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    int attempts = 0;
    /// max |M D(C2) - factor lambda P| / scale over generic points of C1..C4 = 0.
    double max_concordance_deviation = 0.0;
    /// max |M D(C2) / (factor P) - lambda| / |lambda| over the same points.
    double max_lambda_deviation = 0.0;
    /// max |D(C1)| / scale over the same points.
    double max_generic_dc1 = 0.0;
    /// max |D(Ci)| / scale over points of C1..C4 = P = 0.
    std::array<double, 4> max_conservation{};
    /// max |P| / scale at those points.
    double max_key_residual = 0.0;
    /// max constraint residual over every sampled point.
    double max_sample_residual = 0.0;
    bool passed = false;
};

/**
 * Numeric cross-check of the symbolic reduction. Generic points of the
 * constraint variety test M D(C2) = factor * lambda * P and D(C1) = 0;
 * points where additionally P = 0 test D(C1) = ... = D(C4) = 0.
 * Throws SamplingFailure if non-degenerate points cannot be found.
 */
inline OracleReport numeric_reduction_oracle(int samples, std::uint64_t seed, double tolerance,
                                             const geom::KeyPolynomialReport& key, const Polynomial& p,
                                             const geom::SystemSpec& spec = geom::system_spec()) {
    OracleReport report;
    report.samples = samples;
    report.seed = seed;
    report.tolerance = tolerance;

    std::array<Polynomial, 4> derivatives;
    for (std::size_t i = 0; i < 4; ++i) {
        derivatives[i] = geom::apply_derivation(spec, spec.constraints[i]);
    }
    const Polynomial lhs = key.clearing_multiplier * derivatives[1];
    const Polynomial rhs = key.extracted_factor * p * key.lambda;
    const double lambda = key.lambda.get_d();

    GridSampler sampler(seed);
    const int max_attempts = 100 * std::max(samples, 1);

    auto nondegenerate = [&](const StatePoint& s) {
        const ComplexPoint x = s.as_point();
        return std::abs(evaluate(spec.a4, x)) > 1e-6 * term_scale(spec.a4, x) &&
               std::abs(evaluate(spec.a5, x)) > 1e-6 * term_scale(spec.a5, x) && std::abs(s.alpha) > 1e-3;
    };

    int accepted = 0;
    while (accepted < samples) {
        if (++report.attempts > max_attempts) {
            throw SamplingFailure("no non-degenerate generic sample found within the attempt budget");
        }
        const Complex alpha = sampler.complex();
        const Complex kappa = sampler.complex();
        const Complex c = sampler.complex();
        StatePoint best{};
        double best_residual = std::numeric_limits<double>::infinity();
        for (int branch : {1, -1}) {
            try {
                StatePoint s = sample_variety_point(alpha, kappa, c, branch, spec);
                const double r = s.max_residual(spec);
                if (r < best_residual) {
                    best = s;
                    best_residual = r;
                }
            } catch (const DegeneratePoint&) {
            }
        }
        if (!std::isfinite(best_residual) || !nondegenerate(best)) {
            continue;
        }
        ++accepted;
        const ComplexPoint x = best.as_point();
        const Complex l = evaluate(lhs, x);
        const Complex r = evaluate(rhs, x);
        const double scale = std::max(term_scale(lhs, x), term_scale(rhs, x));
        report.max_concordance_deviation = std::max(report.max_concordance_deviation, std::abs(l - r) / scale);
        const Complex base = evaluate(key.extracted_factor * p, x);
        if (std::abs(base) > 0.0) {
            report.max_lambda_deviation =
                std::max(report.max_lambda_deviation, std::abs(l / base - lambda) / std::abs(lambda));
        }
        report.max_generic_dc1 = std::max(report.max_generic_dc1, relative_magnitude(derivatives[0], x));
        report.max_sample_residual = std::max(report.max_sample_residual, best_residual);
    }

    accepted = 0;
    while (accepted < samples) {
        if (++report.attempts > 2 * max_attempts) {
            throw SamplingFailure("no non-degenerate point with P = 0 found within the attempt budget");
        }
        const Complex alpha = sampler.complex();
        const Complex c = sampler.complex();
        const int root_choice = static_cast<int>(sampler.raw() % 4);
        const int branch = sampler.raw() % 2 == 0 ? 1 : -1;
        if (std::abs(alpha) < 1e-3) {
            continue;
        }
        const std::vector<Complex> roots = kappa_roots(p, alpha, c);
        if (roots.empty()) {
            continue;
        }
        StatePoint s{};
        try {
            s = sample_variety_point(alpha, roots[static_cast<std::size_t>(root_choice) % roots.size()], c, branch, spec);
        } catch (const DegeneratePoint&) {
            continue;
        }
        if (!nondegenerate(s)) {
            continue;
        }
        ++accepted;
        const ComplexPoint x = s.as_point();
        for (std::size_t i = 0; i < 4; ++i) {
            report.max_conservation[i] = std::max(report.max_conservation[i], relative_magnitude(derivatives[i], x));
        }
        report.max_key_residual = std::max(report.max_key_residual, relative_magnitude(p, x));
        report.max_sample_residual = std::max(report.max_sample_residual, s.max_residual(spec));
    }

    double worst = std::max({report.max_concordance_deviation, report.max_generic_dc1, report.max_sample_residual});
    for (double value : report.max_conservation) {
        worst = std::max(worst, value);
    }
    report.passed = key.match && worst <= tolerance;
    return report;
}

}  // namespace htv::num

#endif  // HTV_NUMCHECK_ORACLE_HPP
