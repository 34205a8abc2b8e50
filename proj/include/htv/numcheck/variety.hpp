#ifndef HTV_NUMCHECK_VARIETY_HPP
#define HTV_NUMCHECK_VARIETY_HPP

#include <Eigen/Eigenvalues>

#include <map>
#include <string>
#include <vector>

#include "htv/error.hpp"
#include "htv/geomsys/system.hpp"
#include "htv/numcheck/complex_eval.hpp"

namespace htv::num {

/// A numeric point (alpha, kappa, c, u, w). Residuals are recomputed on
/// every call, never stored.
struct StatePoint {
    Complex alpha, kappa, c, u, w;

    ComplexPoint as_point() const {
        ComplexPoint x{};
        x[index_of(Variable::Alpha)] = alpha;
        x[index_of(Variable::Kappa)] = kappa;
        x[index_of(Variable::C)] = c;
        x[index_of(Variable::U)] = u;
        x[index_of(Variable::W)] = w;
        return x;
    }

    /// "C1".."C4" -> |Ci| / (largest monomial magnitude of Ci).
    std::map<std::string, double> residuals(const geom::SystemSpec& spec = geom::system_spec()) const {
        std::map<std::string, double> out;
        const ComplexPoint x = as_point();
        for (std::size_t i = 0; i < spec.constraints.size(); ++i) {
            out["C" + std::to_string(i + 1)] = relative_magnitude(spec.constraints[i], x);
        }
        return out;
    }

    double max_residual(const geom::SystemSpec& spec = geom::system_spec()) const {
        double worst = 0.0;
        for (const auto& [name, value] : residuals(spec)) {
            worst = std::max(worst, value);
        }
        return worst;
    }
};

inline constexpr double kDegeneracyTolerance = 1e-12;

/**
 * Completes (alpha, kappa, c) to a point of {C1 = C2 = C3 = C4 = 0}:
 *
 *     w = branch * sqrt(A4 A1 / A5)   (principal root),   u = alpha A1 / w.
 *
 * Both signs satisfy all four constraints. Throws DegeneratePoint when A4,
 * A5 or w vanish relative to their own term scale.
 */
inline StatePoint sample_variety_point(Complex alpha, Complex kappa, Complex c, int branch,
                                       const geom::SystemSpec& spec = geom::system_spec()) {
    StatePoint s{alpha, kappa, c, Complex(0.0), Complex(0.0)};
    const ComplexPoint x = s.as_point();
    const Complex a1 = evaluate(spec.a1, x);
    const Complex a4 = evaluate(spec.a4, x);
    const Complex a5 = evaluate(spec.a5, x);
    if (std::abs(a4) <= kDegeneracyTolerance * std::max(1.0, term_scale(spec.a4, x))) {
        throw DegeneratePoint("A4 vanishes at the requested point; use the degenerate A4 branch");
    }
    if (std::abs(a5) <= kDegeneracyTolerance * std::max(1.0, term_scale(spec.a5, x))) {
        throw DegeneratePoint("A5 vanishes at the requested point; use the degenerate A5 branch");
    }
    s.w = (branch < 0 ? -1.0 : 1.0) * std::sqrt(a4 * a1 / a5);
    if (std::abs(s.w) <= kDegeneracyTolerance) {
        throw DegeneratePoint("w = beta2 + beta3 vanishes at the requested point");
    }
    s.u = alpha * a1 / s.w;
    return s;
}

/**
 * Complex roots in kappa of P(alpha, kappa, c): eigenvalues of the companion
 * matrix, each polished by Newton steps.
 */
inline std::vector<Complex> kappa_roots(const Polynomial& p, Complex alpha, Complex c) {
    const int degree = p.degree(Variable::Kappa);
    if (degree < 1) {
        return {};
    }
    ComplexPoint x{};
    x[index_of(Variable::Alpha)] = alpha;
    x[index_of(Variable::C)] = c;
    const std::vector<Polynomial> coeffs = p.coefficients(Variable::Kappa);
    std::vector<Complex> values;
    for (const auto& coeff : coeffs) {
        values.push_back(evaluate(coeff, x));
    }
    const Complex lead = values.back();
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    for (int i = 1; i < degree; ++i) {
        companion(i, i - 1) = 1.0;
    }
    for (int i = 0; i < degree; ++i) {
        companion(i, degree - 1) = -values[static_cast<std::size_t>(i)] / lead;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<Complex> roots;
    for (int i = 0; i < degree; ++i) {
        Complex z = solver.eigenvalues()[i];
        for (int iter = 0; iter < 8; ++iter) {
            Complex value = values.back();
            Complex slope = 0.0;
            for (int k = degree - 1; k >= 0; --k) {
                slope = slope * z + value;
                value = value * z + values[static_cast<std::size_t>(k)];
            }
            if (std::abs(slope) == 0.0) {
                break;
            }
            const Complex step = value / slope;
            z -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) {
                break;
            }
        }
        roots.push_back(z);
    }
    return roots;
}

}  // namespace htv::num

#endif  // HTV_NUMCHECK_VARIETY_HPP
