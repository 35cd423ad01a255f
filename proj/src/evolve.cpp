#include "spinchain/evolve.hpp"

#include <cmath>
#include <utility>

#include "spinchain/fidelity.hpp"
#include "spinchain/kernels.hpp"
#include "spinchain/linalg.hpp"

namespace spinchain {

namespace {
constexpr double kTwoPi = 2.0 * kGateTime;
constexpr int kRefineFloor = 512;

ComplexMatrix build_hamiltonian(const ChainParams& p, const ComplexMatrix& h_static, double t) {
    ComplexMatrix h = h_static;
    const double om = drive_amplitude(p, t);
    // the drive operator flips the last spin: one entry per row, at column i^1
    for (int i = 0; i < h.dim(); ++i) h(i, i ^ 1) += om;
    return h;
}
}  // namespace

int default_steps(double t_final) {
    const double per_gate = kDefaultStepsPerGate * t_final / kGateTime;
    return std::max(1, static_cast<int>(std::ceil(per_gate)));
}

PropagatorResult propagate(const ChainParams& p, double t_final, int steps) {
    return propagate_span(p, 0.0, t_final, steps);
}

PropagatorResult propagate_span(const ChainParams& p, double t_start, double t_final, int steps) {
    if (steps < 1) throw SimulationError("propagate: steps must be >= 1");
    if (t_final < t_start) throw SimulationError("propagate: t_final before t_start");

    const ComplexMatrix h_static = static_hamiltonian(p);
    const int dim = h_static.dim();
    if (t_final == t_start)
        return PropagatorResult{ComplexMatrix::identity(dim), t_final, steps, 0.0};
    const double dt = (t_final - t_start) / steps;

    ComplexMatrix u = ComplexMatrix::identity(dim);
    ComplexMatrix next(dim);
    for (int j = 0; j < steps; ++j) {
        const double t_mid = t_start + (j + 0.5) * dt;
        const ComplexMatrix e = expm_i(build_hamiltonian(p, h_static, t_mid), dt);
        kernels::ops().matmul(dim, e.data(), u.data(), next.data());
        std::swap(u, next);
    }
    return PropagatorResult{u, t_final, steps, unitarity_defect(u)};
}

void propagate_sampled(const ChainParams& p, double t_final, int steps,
                       const std::vector<int>& sample_steps,
                       const std::function<void(int, const ComplexMatrix&)>& visit) {
    if (steps < 1) throw SimulationError("propagate: steps must be >= 1");
    const ComplexMatrix h_static = static_hamiltonian(p);
    const int dim = h_static.dim();
    const double dt = t_final / steps;

    ComplexMatrix u = ComplexMatrix::identity(dim);
    ComplexMatrix next(dim);
    std::size_t cursor = 0;
    while (cursor < sample_steps.size() && sample_steps[cursor] == 0) {
        visit(0, u);
        ++cursor;
    }
    for (int j = 0; j < steps && cursor < sample_steps.size(); ++j) {
        const double t_mid = (j + 0.5) * dt;
        const ComplexMatrix e = expm_i(build_hamiltonian(p, h_static, t_mid), dt);
        kernels::ops().matmul(dim, e.data(), u.data(), next.data());
        std::swap(u, next);
        while (cursor < sample_steps.size() && sample_steps[cursor] == j + 1) {
            visit(j + 1, u);
            ++cursor;
        }
    }
}

PropagatorResult refine_until_converged(const ChainParams& p, double t_final, double tol,
                                        int max_steps) {
    if (tol <= 0.0) throw SimulationError("refine_until_converged: tol must be positive");
    int steps = kRefineFloor;
    PropagatorResult coarse = propagate(p, t_final, steps);
    while (true) {
        if (2 * steps > max_steps)
            throw BudgetExceededError("refine_until_converged: step budget " +
                                      std::to_string(max_steps) + " exceeded");
        PropagatorResult fine = propagate(p, t_final, 2 * steps);
        if (max_abs_diff(fine.u, coarse.u) < tol) return fine;
        steps *= 2;
        coarse = std::move(fine);
    }
}

ComplexMatrix rotating_frame_2q(const ChainParams& p, double t) {
    if (p.n_qubits != 2) throw DimensionError("rotating_frame_2q: n_qubits != 2");
    const GateAngles& a = p.angles ? *p.angles : GateAngles{};
    const cplx global = std::polar(1.0, a.omega * t / kTwoPi);
    ComplexMatrix u(4);
    u(0, 0) = global;
    u(1, 1) = global;
    u(2, 2) = global * std::polar(1.0, -a.omega * t / kTwoPi);
    u(3, 3) = u(2, 2);
    return u;
}

ComplexMatrix effective_lower_propagator(const GateAngles& angles, const ChainParams& p, double t) {
    const EffectiveParams e = effective_params(p);
    const double amb = e.alpha_eff - e.beta_eff;
    const double g = angles.varphi * t / kTwoPi;
    const cplx mi(0.0, -1.0);
    const cplx global = std::polar(1.0, 2.0 * angles.omega * t / kTwoPi);

    ComplexMatrix u(2);
    u(0, 0) = std::cos(g) * std::polar(1.0, amb * t);
    u(0, 1) = mi * std::sin(g) * std::polar(1.0, amb * t - angles.phi);
    u(1, 0) = mi * std::sin(g) * std::polar(1.0, -amb * t + angles.phi);
    u(1, 1) = std::cos(g) * std::polar(1.0, -amb * t);
    return global * u;
}

ComplexMatrix effective_block3_propagator(const ChainParams& p, double t) {
    if (p.n_qubits != 3) throw DimensionError("effective_block3_propagator: n_qubits != 3");
    const EffectiveParams e = effective_params(p);
    const double j = e.j_eff ? *e.j_eff : (p.gamma ? *p.gamma : 0.0);
    if (!e.j_eff && !p.gamma) throw SimulationError("effective_block3_propagator: no coupling set");
    const double s = std::sqrt(j * j + e.beta_eff * e.beta_eff);
    const cplx global = std::polar(1.0, -j * t);

    ComplexMatrix u(4);
    u(0, 0) = global * std::polar(1.0, -(e.alpha_eff + s) * t);
    u(1, 1) = global * std::polar(1.0, -(e.alpha_eff - s) * t);
    u(2, 2) = global * std::polar(1.0, (e.alpha_eff - s) * t);
    u(3, 3) = global * std::polar(1.0, (e.alpha_eff + s) * t);
    return u;
}

double rwa_discrepancy(const ChainParams& p, double t) {
    if (p.n_qubits != 2) throw DimensionError("rwa_discrepancy: n_qubits != 2");
    const GateAngles& a = p.angles ? *p.angles : GateAngles{};
    const EffectiveParams e = effective_params(p);
    const ComplexMatrix exact = propagate(p, t, default_steps(t)).u;

    // Analytic lab-frame assembly. Frozen pair {dd, du}: pure static phases;
    // driven pair {ud, uu}: static phases times the rotating-wave rotation.
    const double apb = e.alpha_eff + e.beta_eff;
    const double amb = e.alpha_eff - e.beta_eff;
    const double theta = a.omega * t / kTwoPi;
    const double g = a.varphi * t / kTwoPi;
    const cplx mi(0.0, -1.0);

    ComplexMatrix pred(4);
    pred(0, 0) = std::polar(1.0, -theta - apb * t);
    pred(1, 1) = std::polar(1.0, -theta + apb * t);
    const cplx ph_active = std::polar(1.0, theta);
    const cplx d1 = std::polar(1.0, -amb * t);
    const cplx d2 = std::polar(1.0, amb * t);
    pred(2, 2) = ph_active * d1 * std::cos(g);
    pred(2, 3) = ph_active * d1 * mi * std::sin(g) * std::polar(1.0, -a.phi);
    pred(3, 2) = ph_active * d2 * mi * std::sin(g) * std::polar(1.0, a.phi);
    pred(3, 3) = ph_active * d2 * std::cos(g);

    return 1.0 - operator_fidelity(exact, pred);
}

}  // namespace spinchain
