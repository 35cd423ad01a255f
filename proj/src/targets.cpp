#include "spinchain/targets.hpp"

#include <cmath>

namespace spinchain {

TargetGate barenco(int n_qubits, const GateAngles& angles) {
    if (n_qubits != 2 && n_qubits != 3)
        throw DimensionError("barenco: unsupported size n = " + std::to_string(n_qubits));
    const int dim = 1 << n_qubits;
    ComplexMatrix v = ComplexMatrix::identity(dim);
    const double c = std::cos(angles.varphi / 2.0);
    const double s = std::sin(angles.varphi / 2.0);
    const cplx mi(0.0, -1.0);
    v(dim - 2, dim - 2) = std::polar(c, angles.omega);
    v(dim - 2, dim - 1) = mi * std::polar(s, angles.omega - angles.phi);
    v(dim - 1, dim - 2) = mi * std::polar(s, angles.omega + angles.phi);
    v(dim - 1, dim - 1) = std::polar(c, angles.omega);
    return TargetGate{v, "barenco" + std::to_string(n_qubits), angles};
}

TargetGate controlled_phase(double omega) {
    ComplexMatrix g = ComplexMatrix::identity(4);
    g(3, 3) = std::polar(1.0, omega);
    return TargetGate{g, "controlled_phase", std::nullopt};
}

}  // namespace spinchain
