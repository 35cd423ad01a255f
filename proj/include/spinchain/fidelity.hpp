#pragma once

#include <string>
#include <vector>

#include "spinchain/complex_matrix.hpp"
#include "spinchain/model.hpp"
#include "spinchain/targets.hpp"

namespace spinchain {

// Average operator fidelity over uniformly random pure inputs,
//   F = (|Tr M|^2 + Tr(M M^dag)) / (D (D + 1)),  M = u0^dag u.
// Tr(M M^dag) is computed literally; if it strays from D by more than
// 1e-6 * D one of the operands has lost unitarity (integrator failure
// upstream) and NotUnitaryError is thrown. Global-phase invariant;
// range [1/(D+1), 1] for unitary inputs.
double operator_fidelity(const ComplexMatrix& u, const ComplexMatrix& u0);

// Time-sampled F(t) for one parameter set.
struct FidelityTrace {
    std::vector<double> times;   // strictly increasing, starts at 0
    std::vector<double> values;  // same length; values[0] = F(identity, target)
    std::string label;
};

// Single forward propagation with F evaluated at `samples` points of the
// step grid, evenly spread over (0, t_final]; the t = 0 point is prepended.
// steps = 0 picks the default density for t_final.
FidelityTrace fidelity_trace(const ChainParams& p, const TargetGate& target, double t_final,
                             int samples, int steps = 0);

// Step indices sampled by fidelity_trace (exposed for the sweep code so all
// traces share one time grid): `samples` indices evenly spread over
// [1, steps], deduplicated, always ending at `steps`.
std::vector<int> sample_step_indices(int steps, int samples);

}  // namespace spinchain
