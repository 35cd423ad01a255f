#pragma once

#include <optional>
#include <string>

#include "spinchain/complex_matrix.hpp"
#include "spinchain/model.hpp"

namespace spinchain {

// An ideal gate the simulated propagator is scored against.
struct TargetGate {
    ComplexMatrix matrix;
    std::string label;
    std::optional<GateAngles> angles;
};

// Controlled-SU(2) family: identity on the first 2^n - 2 basis states, and on
// the last two
//   [ e^{i omega} cos(varphi/2)            -i e^{i(omega-phi)} sin(varphi/2) ]
//   [ -i e^{i(omega+phi)} sin(varphi/2)     e^{i omega} cos(varphi/2)        ]
// (pi, pi/2, 0) gives CNOT for n=2 and Toffoli for n=3.
TargetGate barenco(int n_qubits, const GateAngles& angles);

// G(omega) = diag(1, 1, 1, e^{i omega}) on two qubits.
TargetGate controlled_phase(double omega);

}  // namespace spinchain
