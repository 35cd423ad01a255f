#include <cmath>

#include "doctest.h"
#include "spinchain/experiments.hpp"

using namespace spinchain;

namespace {
ChainParams fig1_base_3q() {
    ChainParams p{.n_qubits = 3, .m = 2, .k = 8};
    p.l = 17;
    p.gamma = 15.0;
    return p;
}

// small deterministic slice of the grid so sweep tests stay fast
const std::vector<int> kSubset{0, 123, 456, 789, 1035};
}  // namespace

TEST_CASE("angle grid shape") {
    const AngleGrid grid = angle_grid();
    REQUIRE(grid.triples.size() == 1100);

    double varphi_min = 1e9, varphi_max = -1e9, omega_max = -1e9;
    bool has_cnot_omega = false;
    for (const GateAngles& a : grid.triples) {
        varphi_min = std::min(varphi_min, a.varphi);
        varphi_max = std::max(varphi_max, a.varphi);
        omega_max = std::max(omega_max, a.omega);
        if (std::abs(a.omega - kGateTime / 2.0) < 1e-12) has_cnot_omega = true;
    }
    CHECK(varphi_min == 0.0);
    CHECK(varphi_max == doctest::Approx(kGateTime).epsilon(1e-15));
    CHECK(omega_max == doctest::Approx(1.8 * kGateTime).epsilon(1e-15));
    // pi/2 is not on the 10-point omega grid: the CNOT triple is not a grid point
    CHECK(!has_cnot_omega);
}

TEST_CASE("averaged trace bookkeeping on a grid slice") {
    SweepOptions opts;
    opts.steps = 256;
    opts.triple_subset = kSubset;
    const SweepResult r = average_fidelity_trace(fig1_base_3q(), kGateTime, 4, opts);

    REQUIRE(r.per_point.size() == kSubset.size());
    REQUIRE(r.times.size() == r.mean_f.size());
    for (std::size_t t = 0; t < r.times.size(); ++t) {
        double mean = 0.0, lo = 2.0, hi = -1.0;
        for (const auto& row : r.per_point) {
            mean += row[t];
            lo = std::min(lo, row[t]);
            hi = std::max(hi, row[t]);
        }
        mean /= static_cast<double>(r.per_point.size());
        CHECK(r.mean_f[t] == doctest::Approx(mean).epsilon(1e-15));
        CHECK(r.min_f[t] == lo);
        CHECK(r.max_f[t] == hi);
    }
}

TEST_CASE("averaged trace is reproducible across thread counts") {
    SweepOptions seq;
    seq.steps = 128;
    seq.triple_subset = kSubset;
    seq.threads = 1;
    SweepOptions par = seq;
    par.threads = 2;
    const SweepResult a = average_fidelity_trace(fig1_base_3q(), kGateTime, 3, seq);
    const SweepResult b = average_fidelity_trace(fig1_base_3q(), kGateTime, 3, par);
    REQUIRE(a.mean_f.size() == b.mean_f.size());
    for (std::size_t i = 0; i < a.mean_f.size(); ++i) CHECK(a.mean_f[i] == b.mean_f[i]);
}

TEST_CASE("averaged trace rejects a base with fixed angles") {
    ChainParams base = fig1_base_3q();
    base.angles = GateAngles{0.1, 0.2, 0.3};
    CHECK_THROWS_AS(average_fidelity_trace(base, kGateTime, 2, {}), SimulationError);
}

TEST_CASE("disorder sweep at delta = 0 equals the trace endpoint") {
    SweepOptions opts;
    opts.steps = 256;
    opts.triple_subset = kSubset;

    const SweepResult trace = average_fidelity_trace(fig1_base_3q(), kGateTime, 1, opts);
    const DisorderSweepResult dis =
        disorder_sweep(fig1_base_3q(), DisorderScenario{DisorderMode::kJoint, {0.0}}, opts);

    REQUIRE(dis.mean_f.size() == 1);
    CHECK(std::abs(dis.mean_f[0] - trace.mean_f.back()) <= 1e-15);
}

TEST_CASE("disorder sweep perturbs each parameter per mode") {
    SweepOptions opts;
    opts.steps = 192;
    opts.triple_subset = {123};

    const double delta = 0.05;
    std::vector<double> means;
    for (DisorderMode mode :
         {DisorderMode::kMOnly, DisorderMode::kKOnly, DisorderMode::kLOnly, DisorderMode::kJoint}) {
        const DisorderSweepResult r =
            disorder_sweep(fig1_base_3q(), DisorderScenario{mode, {0.0, delta}}, opts);
        REQUIRE(r.deltas.size() == 2);
        REQUIRE(r.per_point[0].size() == 1);
        // delta = 0 column identical across modes; perturbed column differs
        means.push_back(r.per_point[1][0]);
        CHECK(r.mean_f[0] == r.per_point[0][0]);
    }
    CHECK(means[0] != means[1]);
    CHECK(means[1] != means[2]);
    CHECK(means[0] != means[3]);
}

TEST_CASE("disorder sweep rejects non-real couplings") {
    SweepOptions opts;
    opts.steps = 16;
    opts.triple_subset = {0};
    CHECK_THROWS_AS(
        disorder_sweep(fig1_base_3q(), DisorderScenario{DisorderMode::kLOnly, {-10.0}}, opts),
        SimulationError);
}

TEST_CASE("default disorder deltas span -0.10 .. 0.10") {
    const auto d = DisorderScenario::default_deltas();
    REQUIRE(d.size() == 21);
    CHECK(d.front() == doctest::Approx(-0.10));
    CHECK(d.back() == doctest::Approx(0.10));
    CHECK(d[10] == 0.0);
}

TEST_CASE("delta_j first-order sensitivity") {
    // (k,l) = (8,17), joint delta: (l - k)/gamma = 9/15
    CHECK(delta_j_sensitivity(8, 17, 0.01, 0.01) == doctest::Approx(0.006).epsilon(1e-12));
    // cancellation direction delta_l = (k/l) delta_k
    CHECK(delta_j_sensitivity(8, 17, 0.017, 0.008) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(delta_j_sensitivity(17, 8, 0.01, 0.01), ImaginaryCouplingError);
}

TEST_CASE("delta_j stays close to the exact coupling shift") {
    const double k = 8.0, l = 17.0;
    for (double d = -0.10; d <= 0.10; d += 0.01) {
        const double exact =
            std::sqrt((l + d) * (l + d) - (k + d) * (k + d)) - std::sqrt(l * l - k * k);
        const double linear = delta_j_sensitivity(k, l, d, d);
        CHECK(std::abs(exact - linear) <= 0.01);
    }
}

TEST_CASE("resonant triples") {
    const auto t17 = find_resonant_triples(17);
    CHECK(std::find(t17.begin(), t17.end(), ResonantTriple{8, 15, 17}) != t17.end());

    const auto t5 = find_resonant_triples(5);
    REQUIRE(t5.size() == 2);
    CHECK(t5[0] == ResonantTriple{3, 4, 5});
    CHECK(t5[1] == ResonantTriple{4, 3, 5});

    CHECK(find_resonant_triples(4).empty());

    // brute force double loop over (k, gamma) as the independent oracle
    std::vector<ResonantTriple> oracle;
    for (int l = 2; l <= 100; ++l)
        for (int k = 1; k < l; ++k)
            for (int g = 1; g < l; ++g)
                if (k * k + g * g == l * l) oracle.push_back({k, g, l});
    const auto found = find_resonant_triples(100);
    REQUIRE(found.size() == oracle.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
        CHECK(found[i] == oracle[i]);
        CHECK(found[i].k * found[i].k + found[i].gamma * found[i].gamma ==
              found[i].l * found[i].l);
    }
}
