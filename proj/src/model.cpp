#include "spinchain/model.hpp"

#include <cmath>

#include "spinchain/linalg.hpp"

namespace spinchain {

namespace {
constexpr double kTwoPi = 2.0 * kGateTime;

double wrap_2pi(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

const GateAngles& require_angles(const ChainParams& p) {
    if (!p.angles) throw SimulationError("chain parameters carry no gate angles");
    return *p.angles;
}

// J in units of A, disorder included; the anisotropy and resonance checks
// live here so every builder shares them.
double coupling_j(const ChainParams& p) {
    if (p.l) return *effective_params(p).j_eff;
    if (p.gamma) return *p.gamma;
    throw SimulationError("three-qubit chain needs either l or gamma");
}
}  // namespace

GateAngles GateAngles::canonical(double varphi, double omega, double phi) {
    return GateAngles{varphi, wrap_2pi(omega), wrap_2pi(phi)};
}

ChainParams ChainParams::with_angles(const GateAngles& a) const {
    ChainParams q = *this;
    q.angles = a;
    return q;
}

ChainParams ChainParams::with_deltas(double dm, double dk, double dl) const {
    ChainParams q = *this;
    q.delta_m = dm;
    q.delta_k = dk;
    q.delta_l = dl;
    return q;
}

void validate_params(const ChainParams& p) {
    if (p.n_qubits != 2 && p.n_qubits != 3)
        throw DimensionError("n_qubits must be 2 or 3, got " + std::to_string(p.n_qubits));
    if (p.n_qubits == 3 && !p.l && !p.gamma)
        throw SimulationError("three-qubit chain needs l or gamma");
    if (p.l && p.gamma) {
        const double expect = std::sqrt(double(*p.l) * *p.l - double(p.k) * p.k);
        if (std::abs(*p.gamma - expect) > 1e-9)
            throw SimulationError("gamma inconsistent with l: expected sqrt(l^2-k^2) = " +
                                  std::to_string(expect));
    }
    if (p.l && *p.l <= std::abs(p.k))
        throw ImaginaryCouplingError("resonance index l must exceed |k|");
}

EffectiveParams effective_params(const ChainParams& p) {
    EffectiveParams e;
    e.alpha_eff = p.m + p.delta_m;
    e.beta_eff = p.k + p.delta_k;
    if (p.l) {
        const double le = *p.l + p.delta_l;
        const double ke = p.k + p.delta_k;
        const double j2 = le * le - ke * ke;
        if (j2 <= 0.0)
            throw ImaginaryCouplingError("(l+dl)^2 <= (k+dk)^2: exchange coupling would be non-real");
        e.j_eff = std::sqrt(j2);
    }
    return e;
}

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }
ComplexMatrix pauli_y() {
    return ComplexMatrix::from_rows({{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}});
}
ComplexMatrix pauli_z() { return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }

double drive_amplitude(const ChainParams& p, double t) {
    const GateAngles& a = require_angles(p);
    const double m_eff = p.m + p.delta_m;
    const double k_eff = p.k + p.delta_k;
    // tau = A t / hbar = t in these units
    return (a.varphi / kGateTime) * std::cos(2.0 * (k_eff - m_eff) * t - a.phi);
}

ComplexMatrix drive_operator(int n_qubits) {
    if (n_qubits == 2) return kron(ComplexMatrix::identity(2), pauli_x());
    if (n_qubits == 3)
        return kron(ComplexMatrix::identity(4), pauli_x());
    throw DimensionError("drive_operator: n_qubits must be 2 or 3");
}

ComplexMatrix static_hamiltonian(const ChainParams& p) {
    validate_params(p);
    const GateAngles& a = require_angles(p);
    const EffectiveParams e = effective_params(p);
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    const ComplexMatrix sz = pauli_z();

    if (p.n_qubits == 2) {
        ComplexMatrix h = cplx(a.omega / kTwoPi, 0.0) * kron(sz, id2);
        h += cplx(e.beta_eff, 0.0) * kron(sz, sz);
        h += cplx(e.alpha_eff, 0.0) * kron(id2, sz);
        return h;
    }

    ComplexMatrix h = kron(build_xxz_hamiltonian(p), id2);
    h += cplx(e.beta_eff, 0.0) * kron(kron(id2, sz), sz);
    h += cplx(e.alpha_eff, 0.0) * kron(kron(id2, id2), sz);
    return h;
}

ComplexMatrix build_two_qubit_hamiltonian(const ChainParams& p, double t) {
    if (p.n_qubits != 2) throw DimensionError("build_two_qubit_hamiltonian: n_qubits != 2");
    ComplexMatrix h = static_hamiltonian(p);
    h += cplx(drive_amplitude(p, t), 0.0) * drive_operator(2);
    return h;
}

ComplexMatrix build_xxz_hamiltonian(const ChainParams& p) {
    const GateAngles& a = require_angles(p);
    const double j = coupling_j(p);
    if (j == 0.0) throw DivisionByZeroError("XXZ anisotropy undefined for gamma = 0");
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    const ComplexMatrix sx = pauli_x(), sy = pauli_y(), sz = pauli_z();

    ComplexMatrix h = cplx(j / 2.0, 0.0) * kron(sx, sx);
    h += cplx(j / 2.0, 0.0) * kron(sy, sy);
    h += cplx((j / 2.0) * (1.0 - a.omega / (kTwoPi * j)), 0.0) * kron(sz, sz);
    h += cplx(a.omega / (2.0 * kTwoPi), 0.0) * (kron(sz, id2) + kron(id2, sz));
    return h;
}

ComplexMatrix build_three_qubit_hamiltonian(const ChainParams& p, double t) {
    if (p.n_qubits != 3) throw DimensionError("build_three_qubit_hamiltonian: n_qubits != 3");
    ComplexMatrix h = static_hamiltonian(p);
    h += cplx(drive_amplitude(p, t), 0.0) * drive_operator(3);
    return h;
}

std::vector<std::string> validate_rwa(const ChainParams& p) {
    std::vector<std::string> warnings;
    if (p.angles) {
        const double varphi = p.angles->varphi;
        if (varphi < 0.0 || varphi > kGateTime)
            warnings.push_back("varphi outside [0, pi]: rotation angle leaves the validity window");
        if (static_cast<double>(p.m) <= varphi / kGateTime)
            warnings.push_back("m <= varphi/pi: static field does not dominate the drive amplitude");
    }
    if (std::abs(p.k - p.m) <= 1)
        warnings.push_back("|k - m| <= 1: drive detuning too small for the rotating-wave regime");
    return warnings;
}

}  // namespace spinchain
