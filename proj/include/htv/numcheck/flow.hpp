#ifndef HTV_NUMCHECK_FLOW_HPP
#define HTV_NUMCHECK_FLOW_HPP

#include <array>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "htv/numcheck/variety.hpp"

namespace htv::num {

inline constexpr std::array<Variable, 5> kFlowVariables{Variable::Alpha, Variable::Kappa, Variable::C, Variable::U,
                                                        Variable::W};
inline constexpr double kBlowUpThreshold = 1e12;
inline constexpr double kStartResidualGate = 1e-6;

/// Right-hand side of the ODE x' = D(x) on (alpha, kappa, c, u, w).
inline StatePoint flow_rhs(const StatePoint& s, const geom::SystemSpec& spec = geom::system_spec()) {
    const ComplexPoint x = s.as_point();
    auto d = [&](Variable v) { return evaluate(*spec.derivation[index_of(v)], x); };
    return {d(Variable::Alpha), d(Variable::Kappa), d(Variable::C), d(Variable::U), d(Variable::W)};
}

namespace detail {

inline StatePoint axpy(const StatePoint& s, double h, const StatePoint& k) {
    return {s.alpha + h * k.alpha, s.kappa + h * k.kappa, s.c + h * k.c, s.u + h * k.u, s.w + h * k.w};
}

inline double norm(const StatePoint& s) {
    return std::sqrt(std::norm(s.alpha) + std::norm(s.kappa) + std::norm(s.c) + std::norm(s.u) + std::norm(s.w));
}

inline double distance(const StatePoint& a, const StatePoint& b) {
    return norm(axpy(a, -1.0, b));
}

}  // namespace detail

/// One classical Runge-Kutta step; h may be negative.
inline StatePoint rk4_step(const StatePoint& s, double h, const geom::SystemSpec& spec = geom::system_spec()) {
    const StatePoint k1 = flow_rhs(s, spec);
    const StatePoint k2 = flow_rhs(detail::axpy(s, h / 2, k1), spec);
    const StatePoint k3 = flow_rhs(detail::axpy(s, h / 2, k2), spec);
    const StatePoint k4 = flow_rhs(detail::axpy(s, h, k3), spec);
    StatePoint next = s;
    next = detail::axpy(next, h / 6, k1);
    next = detail::axpy(next, h / 3, k2);
    next = detail::axpy(next, h / 3, k3);
    next = detail::axpy(next, h / 6, k4);
    return next;
}

struct FlowReport {
    double t_end = 0.0;
    double step = 0.0;
    int steps_taken = 0;
    bool blew_up = false;
    double blowup_time = 0.0;
    /// States at t = 0, h, 2h, ...
    std::vector<StatePoint> trajectory;
    /// "C1".."C4", "P" -> max over the trajectory of |G(x(t)) - G(x(0))| / scale(G).
    std::map<std::string, double> max_drift;

    double worst_drift() const {
        double worst = 0.0;
        for (const auto& [name, value] : max_drift) {
            worst = std::max(worst, value);
        }
        return worst;
    }
};

/// Integrates x' = D(x) from `start` with fixed step RK4 until t_end or
/// until |x| exceeds kBlowUpThreshold. The start must lie on the variety
/// within kStartResidualGate.
inline FlowReport flow_integrate(const StatePoint& start, double t_end, double step, const Polynomial& p,
                                 const geom::SystemSpec& spec = geom::system_spec()) {
    if (!(step > 0.0) || !(t_end >= 0.0)) {
        throw DegenerateInput("flow_integrate: step must be positive and t_end non-negative");
    }
    if (start.max_residual(spec) > kStartResidualGate) {
        throw DegenerateInput("flow_integrate: start point is off the constraint variety");
    }
    FlowReport report;
    report.t_end = t_end;
    report.step = step;
    const int steps = static_cast<int>(std::llround(t_end / step));

    std::vector<std::pair<std::string, const Polynomial*>> invariants;
    for (std::size_t i = 0; i < spec.constraints.size(); ++i) {
        invariants.emplace_back("C" + std::to_string(i + 1), &spec.constraints[i]);
    }
    invariants.emplace_back("P", &p);
    std::vector<Complex> initial;
    for (const auto& [name, g] : invariants) {
        initial.push_back(evaluate(*g, start.as_point()));
    }
    auto track = [&](const StatePoint& s) {
        const ComplexPoint x = s.as_point();
        for (std::size_t i = 0; i < invariants.size(); ++i) {
            const Polynomial& g = *invariants[i].second;
            const double scale = term_scale(g, x);
            const double change = std::abs(evaluate(g, x) - initial[i]);
            double& slot = report.max_drift[invariants[i].first];
            slot = std::max(slot, scale > 0.0 ? change / scale : change);
        }
    };

    StatePoint s = start;
    report.trajectory.push_back(s);
    track(s);
    for (int n = 0; n < steps; ++n) {
        s = rk4_step(s, step, spec);
        if (!std::isfinite(detail::norm(s)) || detail::norm(s) > kBlowUpThreshold) {
            report.blew_up = true;
            report.blowup_time = (n + 1) * step;
            break;
        }
        ++report.steps_taken;
        report.trajectory.push_back(s);
        track(s);
    }
    return report;
}

struct FlowConvergenceReport {
    FlowReport coarse;   // step h
    FlowReport medium;   // step h/2
    FlowReport fine;     // step h/4
    /// worst_drift(h) / worst_drift(h/2).
    double drift_ratio = 0.0;
    /// max_t |x_h(t) - x_{h/2}(t)| / max(1, |x_{h/2}(t)|), and the same for h/2 vs h/4.
    double integration_error = 0.0;
    double integration_error_half = 0.0;
    /// integration_error / integration_error_half; about 16 for a fourth-order method.
    double order_ratio = 0.0;
};

inline FlowConvergenceReport flow_convergence(const StatePoint& start, double t_end, double step, const Polynomial& p,
                                              const geom::SystemSpec& spec = geom::system_spec()) {
    FlowConvergenceReport out;
    out.coarse = flow_integrate(start, t_end, step, p, spec);
    out.medium = flow_integrate(start, t_end, step / 2, p, spec);
    out.fine = flow_integrate(start, t_end, step / 4, p, spec);

    auto compare = [](const FlowReport& a, const FlowReport& b) {
        double worst = 0.0;
        for (std::size_t n = 0; n < a.trajectory.size() && 2 * n < b.trajectory.size(); ++n) {
            const StatePoint& reference = b.trajectory[2 * n];
            worst = std::max(worst, detail::distance(a.trajectory[n], reference) /
                                        std::max(1.0, detail::norm(reference)));
        }
        return worst;
    };
    const double medium_drift = out.medium.worst_drift();
    out.drift_ratio = medium_drift > 0.0 ? out.coarse.worst_drift() / medium_drift : 0.0;
    out.integration_error = compare(out.coarse, out.medium);
    out.integration_error_half = compare(out.medium, out.fine);
    out.order_ratio = out.integration_error_half > 0.0 ? out.integration_error / out.integration_error_half : 0.0;
    return out;
}

}  // namespace htv::num

#endif  // HTV_NUMCHECK_FLOW_HPP
