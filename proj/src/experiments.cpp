#include "spinchain/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "spinchain/evolve.hpp"
#include "spinchain/targets.hpp"

namespace spinchain {

namespace {

void parallel_for(int n, int threads, const std::function<void(int)>& body) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, n));
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::vector<int> resolve_subset(const SweepOptions& opts, int grid_size) {
    if (opts.triple_subset.empty()) {
        std::vector<int> all(grid_size);
        for (int i = 0; i < grid_size; ++i) all[i] = i;
        return all;
    }
    for (int i : opts.triple_subset)
        if (i < 0 || i >= grid_size) throw SimulationError("triple_subset index out of range");
    return opts.triple_subset;
}

[[noreturn]] void rethrow_with_triple(int index, const GateAngles& a) {
    try {
        throw;
    } catch (const SimulationError& e) {
        throw SimulationError("triple " + std::to_string(index) + " (varphi=" +
                              std::to_string(a.varphi) + ", omega=" + std::to_string(a.omega) +
                              ", phi=" + std::to_string(a.phi) + "): " + e.what());
    }
}

}  // namespace

AngleGrid angle_grid() {
    AngleGrid grid;
    grid.triples.reserve(11 * 10 * 10);
    for (int iv = 0; iv <= 10; ++iv)
        for (int io = 0; io < 10; ++io)
            for (int ip = 0; ip < 10; ++ip)
                grid.triples.push_back(GateAngles{iv * kGateTime / 10.0, io * kGateTime / 5.0,
                                                  ip * kGateTime / 5.0});
    return grid;
}

SweepResult average_fidelity_trace(const ChainParams& base, double t_final, int samples,
                                   const SweepOptions& opts) {
    if (base.angles) throw SimulationError("average_fidelity_trace: base must not fix the angles");
    validate_params(base);

    const AngleGrid grid = angle_grid();
    const std::vector<int> subset = resolve_subset(opts, static_cast<int>(grid.triples.size()));
    const int steps = opts.steps > 0 ? opts.steps : default_steps(t_final);
    const int n = static_cast<int>(subset.size());

    SweepResult result;
    result.triples.resize(n);
    result.per_point.resize(n);

    parallel_for(n, opts.threads, [&](int i) {
        const GateAngles& a = grid.triples[subset[i]];
        try {
            const TargetGate target = barenco(base.n_qubits, a);
            FidelityTrace trace =
                fidelity_trace(base.with_angles(a), target, t_final, samples, steps);
            result.triples[i] = a;
            result.per_point[i] = std::move(trace.values);
        } catch (...) {
            rethrow_with_triple(subset[i], a);
        }
    });

    const double dt = t_final / steps;
    const std::vector<int> idx = sample_step_indices(steps, samples);
    result.times.push_back(0.0);
    for (int s : idx) result.times.push_back(s * dt);

    const std::size_t nt = result.times.size();
    result.mean_f.assign(nt, 0.0);
    result.min_f.assign(nt, 2.0);
    result.max_f.assign(nt, -1.0);
    for (int i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < nt; ++t) {
            const double f = result.per_point[i][t];
            result.mean_f[t] += f;
            result.min_f[t] = std::min(result.min_f[t], f);
            result.max_f[t] = std::max(result.max_f[t], f);
        }
    }
    for (std::size_t t = 0; t < nt; ++t) result.mean_f[t] /= n;
    return result;
}

const char* disorder_mode_name(DisorderMode mode) {
    switch (mode) {
        case DisorderMode::kMOnly: return "m_only";
        case DisorderMode::kKOnly: return "k_only";
        case DisorderMode::kLOnly: return "l_only";
        case DisorderMode::kJoint: return "joint";
    }
    return "unknown";
}

std::vector<double> DisorderScenario::default_deltas() {
    std::vector<double> d;
    d.reserve(21);
    for (int i = -10; i <= 10; ++i) d.push_back(i / 100.0);
    return d;
}

DisorderScenario DisorderScenario::standard(DisorderMode mode) {
    return DisorderScenario{mode, default_deltas()};
}

DisorderSweepResult disorder_sweep(const ChainParams& base, const DisorderScenario& scenario,
                                   const SweepOptions& opts) {
    if (base.angles) throw SimulationError("disorder_sweep: base must not fix the angles");
    if (base.n_qubits != 3) throw DimensionError("disorder_sweep: base must be the three-qubit chain");
    if (!base.l) throw SimulationError("disorder_sweep: base needs the resonance index l");
    validate_params(base);

    const AngleGrid grid = angle_grid();
    const std::vector<int> subset = resolve_subset(opts, static_cast<int>(grid.triples.size()));
    const int steps = opts.steps > 0 ? opts.steps : default_steps(kGateTime);
    const int n = static_cast<int>(subset.size());

    DisorderSweepResult result;
    result.mode = scenario.mode;
    result.deltas = scenario.delta_values;
    result.triples.resize(n);
    for (int i = 0; i < n; ++i) result.triples[i] = grid.triples[subset[i]];

    for (double delta : scenario.delta_values) {
        double dm = 0.0, dk = 0.0, dl = 0.0;
        switch (scenario.mode) {
            case DisorderMode::kMOnly: dm = delta; break;
            case DisorderMode::kKOnly: dk = delta; break;
            case DisorderMode::kLOnly: dl = delta; break;
            case DisorderMode::kJoint: dm = dk = dl = delta; break;
        }
        const ChainParams perturbed = base.with_deltas(dm, dk, dl);

        std::vector<double> values(n, 0.0);
        parallel_for(n, opts.threads, [&](int i) {
            const GateAngles& a = grid.triples[subset[i]];
            try {
                const TargetGate target = barenco(3, a);
                const PropagatorResult prop = propagate(perturbed.with_angles(a), kGateTime, steps);
                values[i] = operator_fidelity(prop.u, target.matrix);
            } catch (...) {
                rethrow_with_triple(subset[i], a);
            }
        });

        double mean = 0.0;
        for (int i = 0; i < n; ++i) mean += values[i];
        result.per_point.push_back(std::move(values));
        result.mean_f.push_back(mean / n);
    }
    return result;
}

double delta_j_sensitivity(double k, double l, double delta_k, double delta_l) {
    const double disc = l * l - k * k;
    if (disc <= 0.0)
        throw ImaginaryCouplingError("delta_j_sensitivity: requires l^2 > k^2");
    return (l * delta_l - k * delta_k) / std::sqrt(disc);
}

std::vector<ResonantTriple> find_resonant_triples(int l_max) {
    std::vector<ResonantTriple> out;
    for (int l = 2; l <= l_max; ++l)
        for (int k = 1; k < l; ++k) {
            const long long g2 = static_cast<long long>(l) * l - static_cast<long long>(k) * k;
            const int g = static_cast<int>(std::llround(std::sqrt(static_cast<double>(g2))));
            for (int cand = std::max(1, g - 1); cand <= g + 1; ++cand)
                if (static_cast<long long>(cand) * cand == g2) {
                    out.push_back(ResonantTriple{k, cand, l});
                    break;
                }
        }
    return out;
}

}  // namespace spinchain
