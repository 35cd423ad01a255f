#include "spinchain/fidelity.hpp"

#include <cmath>

#include "spinchain/evolve.hpp"
#include "spinchain/kernels.hpp"

namespace spinchain {

double operator_fidelity(const ComplexMatrix& u, const ComplexMatrix& u0) {
    if (u.dim() != u0.dim())
        throw DimensionError("operator_fidelity: dimension mismatch " + std::to_string(u.dim()) +
                             " vs " + std::to_string(u0.dim()));
    const int dim = u.dim();
    ComplexMatrix m(dim);
    kernels::ops().matmul_adj_a(dim, u0.data(), u.data(), m.data());

    cplx tr(0.0, 0.0);
    double frob2 = 0.0;
    for (int i = 0; i < dim; ++i) {
        tr += m(i, i);
        for (int j = 0; j < dim; ++j) frob2 += std::norm(m(i, j));
    }
    if (std::abs(frob2 - dim) > 1e-6 * dim)
        throw NotUnitaryError("operator_fidelity: Tr(M M^dag) = " + std::to_string(frob2) +
                              " deviates from D = " + std::to_string(dim));
    return (std::norm(tr) + frob2) / (static_cast<double>(dim) * (dim + 1));
}

std::vector<int> sample_step_indices(int steps, int samples) {
    if (steps < 1) throw SimulationError("sample_step_indices: steps must be >= 1");
    if (samples < 1) throw SimulationError("sample_step_indices: samples must be >= 1");
    std::vector<int> idx;
    idx.reserve(samples);
    for (int j = 1; j <= samples; ++j) {
        int s = static_cast<int>(std::llround(static_cast<double>(j) * steps / samples));
        s = std::max(1, std::min(steps, s));
        if (idx.empty() || s != idx.back()) idx.push_back(s);
    }
    return idx;
}

FidelityTrace fidelity_trace(const ChainParams& p, const TargetGate& target, double t_final,
                             int samples, int steps) {
    const int dim = 1 << p.n_qubits;
    if (target.matrix.dim() != dim)
        throw DimensionError("fidelity_trace: target dimension " + std::to_string(target.matrix.dim()) +
                             " does not match 2^n = " + std::to_string(dim));
    if (steps == 0) steps = default_steps(t_final);

    const std::vector<int> idx = sample_step_indices(steps, samples);
    const double dt = t_final / steps;

    FidelityTrace trace;
    trace.label = target.label;
    trace.times.reserve(idx.size() + 1);
    trace.values.reserve(idx.size() + 1);
    trace.times.push_back(0.0);
    trace.values.push_back(operator_fidelity(ComplexMatrix::identity(dim), target.matrix));

    propagate_sampled(p, t_final, steps, idx, [&](int step, const ComplexMatrix& u) {
        trace.times.push_back(step * dt);
        trace.values.push_back(operator_fidelity(u, target.matrix));
    });
    return trace;
}

}  // namespace spinchain
