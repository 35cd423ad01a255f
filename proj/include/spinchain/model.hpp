#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinchain/complex_matrix.hpp"

namespace spinchain {

// Units: A = hbar = 1 throughout. Energies in units of A, times in units of
// hbar/A; the gate time is t_g = pi.
inline constexpr double kGateTime = 3.14159265358979323846;

// Barenco triple. omega and phi are stored modulo 2*pi; varphi is stored as
// given (values outside [0, pi] are flagged by validate_rwa, not rejected,
// so RWA-breakdown studies can run).
struct GateAngles {
    double varphi = 0.0;
    double omega = 0.0;
    double phi = 0.0;

    static GateAngles canonical(double varphi, double omega, double phi);
};

// Physical configuration in dimensionless units: alpha = m*A, beta = k*A,
// J = gamma*A with gamma = sqrt(l^2 - k^2) when the resonance index l is set.
// delta_* are the disorder offsets (zero except in disorder scans).
struct ChainParams {
    int n_qubits = 2;
    int m = 2;
    int k = 8;
    std::optional<int> l;
    std::optional<double> gamma;
    std::optional<GateAngles> angles;
    double delta_m = 0.0;
    double delta_k = 0.0;
    double delta_l = 0.0;

    ChainParams with_angles(const GateAngles& a) const;
    ChainParams with_deltas(double dm, double dk, double dl) const;
};

// Throws on structurally invalid parameters (n outside {2,3}, three-qubit
// chain without a coupling, gamma inconsistent with l, ...).
void validate_params(const ChainParams& p);

struct EffectiveParams {
    double alpha_eff = 0.0;              // (m + delta_m) * A
    double beta_eff = 0.0;               // (k + delta_k) * A
    std::optional<double> j_eff;         // sqrt((l+delta_l)^2 - (k+delta_k)^2) * A
};

// Throws ImaginaryCouplingError if (l+delta_l)^2 <= (k+delta_k)^2.
EffectiveParams effective_params(const ChainParams& p);

// Pauli matrices in the computational ordering used everywhere here:
// basis index bit 0 = "down", bit 1 = "up"; sigma_z = diag(+1, -1), i.e.
// sigma_z |down> = +|down>. Most-significant bit is qubit 1.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// Omega(tau) = (varphi*A/pi) * cos(2*(k_eff - m_eff)*tau - phi), tau = A t/hbar.
double drive_amplitude(const ChainParams& p, double t);

// sigma_x on the last (driven) spin of an n-qubit chain.
ComplexMatrix drive_operator(int n_qubits);

// Drive-free part of the chain Hamiltonian (2- or 3-qubit by p.n_qubits).
ComplexMatrix static_hamiltonian(const ChainParams& p);

// H(t) = (omega A/2pi) sigma1^z + beta sigma1^z sigma2^z + alpha sigma2^z
//        + Omega(tau) sigma2^x, basis order {dd, du, ud, uu}.
ComplexMatrix build_two_qubit_hamiltonian(const ChainParams& p, double t);

// (J/2)[sx sx + sy sy + (1 - omega A/(2 pi J)) sz sz] + (omega A/4pi)(sz1 + sz2).
ComplexMatrix build_xxz_hamiltonian(const ChainParams& p);

// H_XXZ(1,2) ⊗ 1 + beta 1⊗sz⊗sz + alpha 1⊗1⊗sz + Omega(tau) 1⊗1⊗sx.
ComplexMatrix build_three_qubit_hamiltonian(const ChainParams& p, double t);

// Warnings (never errors) for violated rotating-wave-approximation
// conditions: varphi outside [0, pi], |k - m| <= 1, or m <= varphi/pi
// (static field must dominate the drive amplitude).
std::vector<std::string> validate_rwa(const ChainParams& p);

}  // namespace spinchain
