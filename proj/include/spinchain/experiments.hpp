#pragma once

#include <string>
#include <vector>

#include "spinchain/fidelity.hpp"
#include "spinchain/model.hpp"

namespace spinchain {

// The canonical 1100-triple grid: varphi in {0, pi/10, ..., pi} (11 values,
// both endpoints), omega and phi in {0, pi/5, ..., 9 pi/5} (10 values each,
// 2 pi excluded). Iteration order is varphi-major, then omega, then phi.
struct AngleGrid {
    std::vector<GateAngles> triples;
};

AngleGrid angle_grid();

struct SweepOptions {
    int steps = 0;                    // 0 -> default density for the run
    int threads = 0;                  // 0 -> hardware concurrency
    std::vector<int> triple_subset;   // empty -> whole grid (testing hook)
};

// Fig.1-style campaign: one fidelity trace per grid triple (each scored
// against its own Barenco target), averaged pointwise in grid order.
struct SweepResult {
    std::vector<double> times;
    std::vector<GateAngles> triples;
    std::vector<std::vector<double>> per_point;  // [triple][time]
    std::vector<double> mean_f, min_f, max_f;    // [time]
};

SweepResult average_fidelity_trace(const ChainParams& base, double t_final, int samples,
                                   const SweepOptions& opts = {});

enum class DisorderMode { kMOnly, kKOnly, kLOnly, kJoint };

const char* disorder_mode_name(DisorderMode mode);

struct DisorderScenario {
    DisorderMode mode = DisorderMode::kJoint;
    std::vector<double> delta_values;

    // -0.10 .. 0.10 inclusive, step 0.01 (21 values)
    static std::vector<double> default_deltas();
    static DisorderScenario standard(DisorderMode mode);
};

// Fig.2-style campaign: per-delta fidelity at the gate time over the grid.
struct DisorderSweepResult {
    DisorderMode mode = DisorderMode::kJoint;
    std::vector<double> deltas;
    std::vector<GateAngles> triples;
    std::vector<std::vector<double>> per_point;  // [delta][triple], F(t_g)
    std::vector<double> mean_f;                  // [delta]
};

DisorderSweepResult disorder_sweep(const ChainParams& base, const DisorderScenario& scenario,
                                   const SweepOptions& opts = {});

// First-order shift of the exchange coupling under (delta_k, delta_l):
// (l*delta_l - k*delta_k) / sqrt(l^2 - k^2).
double delta_j_sensitivity(double k, double l, double delta_k, double delta_l);

// Integer triples k^2 + gamma^2 = l^2 with gamma >= 1, 1 <= k < l <= l_max:
// exactly the parameter sets satisfying both the block resonance and the
// controlled-phase timing at the shared gate time. Sorted by (l, k).
struct ResonantTriple {
    int k = 0;
    int gamma = 0;
    int l = 0;
    bool operator==(const ResonantTriple&) const = default;
};

std::vector<ResonantTriple> find_resonant_triples(int l_max);

}  // namespace spinchain
