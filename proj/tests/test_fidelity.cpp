#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "spinchain/evolve.hpp"
#include "spinchain/fidelity.hpp"
#include "spinchain/linalg.hpp"
#include "spinchain/targets.hpp"

using namespace spinchain;

namespace {
ComplexMatrix random_unitary(int dim, std::mt19937_64& rng) {
    return expm_i(oracles::random_hermitian(dim, rng), 1.3);
}
}  // namespace

TEST_CASE("fidelity of a gate with itself is one") {
    std::mt19937_64 rng(41);
    for (int dim : {2, 4, 8}) {
        const ComplexMatrix u = random_unitary(dim, rng);
        CHECK(operator_fidelity(u, u) == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("fidelity ignores a global phase") {
    std::mt19937_64 rng(42);
    const ComplexMatrix u = random_unitary(4, rng);
    ComplexMatrix v = u;
    v *= std::polar(1.0, 1.234);
    CHECK(operator_fidelity(v, u) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("traceless overlap reaches the lower bound") {
    // u0 = identity, u = sigma_x on each pair: Tr M = 0, F = 1/(D+1)
    ComplexMatrix u(4);
    u(0, 1) = u(1, 0) = u(2, 3) = u(3, 2) = 1.0;
    CHECK(operator_fidelity(u, ComplexMatrix::identity(4)) == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("fidelity is symmetric and invariant under a shared rotation") {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix u = random_unitary(4, rng);
        const ComplexMatrix v = random_unitary(4, rng);
        const ComplexMatrix w = random_unitary(4, rng);
        const double f = operator_fidelity(u, v);
        CHECK(f == doctest::Approx(operator_fidelity(v, u)).epsilon(1e-12));
        CHECK(f == doctest::Approx(operator_fidelity(w * u, w * v)).epsilon(1e-12));
    }
}

TEST_CASE("the two printed fidelity forms agree for unitary inputs") {
    std::mt19937_64 rng(44);
    for (int dim : {2, 4, 8}) {
        const ComplexMatrix u = random_unitary(dim, rng);
        const ComplexMatrix v = random_unitary(dim, rng);
        const double f = operator_fidelity(u, v);
        // (D f + 1) / (D + 1) with f = |Tr M|^2 / D^2
        ComplexMatrix m = adjoint(v) * u;
        const double traced = std::norm(m.trace()) / (double(dim) * dim);
        CHECK(f == doctest::Approx((dim * traced + 1.0) / (dim + 1.0)).epsilon(1e-13));
    }
}

TEST_CASE("fidelity bounds over random unitary pairs") {
    std::mt19937_64 rng(45);
    for (int rep = 0; rep < 200; ++rep) {
        const int dim = (rep % 3 == 0) ? 2 : (rep % 3 == 1) ? 4 : 8;
        const double f = operator_fidelity(random_unitary(dim, rng), random_unitary(dim, rng));
        CHECK(f >= 1.0 / (dim + 1) - 1e-12);
        CHECK(f <= 1.0 + 1e-12);
    }
}

TEST_CASE("non-unitary operands trip the trace guard") {
    ComplexMatrix bad = ComplexMatrix::identity(2);
    bad *= cplx(2.0, 0.0);
    CHECK_THROWS_AS(operator_fidelity(bad, ComplexMatrix::identity(2)), NotUnitaryError);
    CHECK_THROWS_AS(operator_fidelity(ComplexMatrix::identity(2), bad), NotUnitaryError);
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(operator_fidelity(ComplexMatrix::identity(2), ComplexMatrix::identity(4)),
                    DimensionError);
}

TEST_CASE("sample step indices cover (0, steps] without duplicates") {
    for (auto [steps, samples] : {std::pair{4096, 300}, {100, 7}, {5, 9}, {1, 1}}) {
        const std::vector<int> idx = sample_step_indices(steps, samples);
        REQUIRE(!idx.empty());
        CHECK(idx.front() >= 1);
        CHECK(idx.back() == steps);
        for (std::size_t i = 1; i < idx.size(); ++i) CHECK(idx[i] > idx[i - 1]);
        CHECK(static_cast<int>(idx.size()) <= samples);
    }
}

TEST_CASE("fidelity trace starts at the identity overlap and stays in bounds") {
    ChainParams p{.n_qubits = 2, .m = 2, .k = 8};
    const GateAngles a{0.7 * kGateTime, 0.4 * kGateTime, 0.6 * kGateTime};
    p.angles = a;
    const TargetGate target = barenco(2, a);
    const FidelityTrace trace = fidelity_trace(p, target, kGateTime, 25, 512);

    REQUIRE(trace.times.size() == trace.values.size());
    CHECK(trace.times.front() == 0.0);
    CHECK(trace.values.front() ==
          doctest::Approx(operator_fidelity(ComplexMatrix::identity(4), target.matrix)));
    for (std::size_t i = 1; i < trace.times.size(); ++i)
        CHECK(trace.times[i] > trace.times[i - 1]);
    for (double f : trace.values) {
        CHECK(f >= 0.2 - 1e-12);
        CHECK(f <= 1.0 + 1e-12);
    }
    CHECK(trace.times.back() == doctest::Approx(kGateTime));
}

TEST_CASE("fidelity trace final point matches the frozen gate-time value") {
    ChainParams p{.n_qubits = 2, .m = 2, .k = 8};
    const GateAngles cnot{kGateTime, kGateTime / 2.0, 0.0};
    p.angles = cnot;
    const FidelityTrace trace = fidelity_trace(p, barenco(2, cnot), kGateTime, 1, 4096);
    REQUIRE(trace.values.size() == 2);
    CHECK(trace.values.back() == doctest::Approx(0.993881967623130).epsilon(1e-9));
}

TEST_CASE("fidelity trace rejects a mismatched target") {
    ChainParams p{.n_qubits = 3, .m = 2, .k = 8};
    p.l = 17;
    p.angles = GateAngles{0.1, 0.2, 0.3};
    CHECK_THROWS_AS(fidelity_trace(p, controlled_phase(0.5), kGateTime, 4, 64), DimensionError);
}
