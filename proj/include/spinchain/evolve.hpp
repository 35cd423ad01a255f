#pragma once

#include <functional>

#include "spinchain/complex_matrix.hpp"
#include "spinchain/model.hpp"

namespace spinchain {

// Default time-step density: 4096 steps per gate time t_g = pi, giving
// ||H|| dt of order 0.015 for the reference parameter sets.
inline constexpr int kDefaultStepsPerGate = 4096;

int default_steps(double t_final);

struct PropagatorResult {
    ComplexMatrix u;
    double t_final = 0.0;
    int steps = 0;
    double unitarity_defect = 0.0;
};

// Exact numeric propagator: time-ordered product of exponential-midpoint
// factors exp(-i H(t_j + dt/2) dt), latest step leftmost. Unitary at every
// step up to eigensolver roundoff.
PropagatorResult propagate(const ChainParams& p, double t_final, int steps);

// Same integrator started at t_start (the Hamiltonian is time-dependent, so
// a split propagation must resume on the shifted grid).
PropagatorResult propagate_span(const ChainParams& p, double t_start, double t_final, int steps);

// Runs the stepper once and reports the accumulated propagator at selected
// step indices (ascending, each in [0, steps]). Index 0 is the identity.
void propagate_sampled(const ChainParams& p, double t_final, int steps,
                       const std::vector<int>& sample_steps,
                       const std::function<void(int step_index, const ComplexMatrix& u)>& visit);

// Doubles the step count from a floor of 512 until the propagator changes by
// less than tol entrywise; throws BudgetExceededError once the next doubling
// would exceed max_steps (default 2^24).
PropagatorResult refine_until_converged(const ChainParams& p, double t_final, double tol,
                                        int max_steps = 1 << 24);

// U_hat(t) = e^{i omega A t/(2 pi hbar)} diag(1, 1, e^{-i omega A t/(2 pi hbar)}, ...):
// the frame transformation that removes the static field phases (two qubits).
ComplexMatrix rotating_frame_2q(const ChainParams& p, double t);

// Closed-form driven-block propagator in the rotating-wave limit,
//   e^{i omega A t/(pi hbar)} diag(e^{i(alpha-beta)t}, e^{-i(alpha-beta)t}) R(t),
// with R the equatorial-axis rotation set by (varphi, phi).
ComplexMatrix effective_lower_propagator(const GateAngles& angles, const ChainParams& p, double t);

// Diagonal effective propagator of the resonant 4x4 block (three qubits):
// e^{-iJt} diag(e^{-i(alpha+s)t}, e^{-i(alpha-s)t}, e^{i(alpha-s)t}, e^{i(alpha+s)t}),
// s = sqrt(J^2 + beta^2).
ComplexMatrix effective_block3_propagator(const ChainParams& p, double t);

// 1 - F between the exact numeric propagator and the analytic block
// assembly (frozen block static phases + rotating-wave Rabi block), i.e. the
// size of everything the rotating-wave approximation discards. Two qubits.
double rwa_discrepancy(const ChainParams& p, double t);

}  // namespace spinchain
