#pragma once

#include <stdexcept>
#include <string>

namespace spinchain {

// Base class for numeric and contract failures raised by the library.
struct SimulationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Wrong, unsupported or mismatched matrix/system dimensions.
struct DimensionError : SimulationError {
    using SimulationError::SimulationError;
};

// Input violates the Hermiticity tolerance of the eigensolver.
struct NotHermitianError : SimulationError {
    using SimulationError::SimulationError;
};

// Jacobi sweep budget exhausted before the off-diagonal norm converged.
struct NoConvergenceError : SimulationError {
    using SimulationError::SimulationError;
};

// Tr(M M^dag) deviates from D: an operand of the fidelity is not unitary.
struct NotUnitaryError : SimulationError {
    using SimulationError::SimulationError;
};

// Step-doubling refinement would exceed its step budget.
struct BudgetExceededError : SimulationError {
    using SimulationError::SimulationError;
};

// (l+dl)^2 <= (k+dk)^2: the exchange coupling J would be non-real.
struct ImaginaryCouplingError : SimulationError {
    using SimulationError::SimulationError;
};

// gamma = 0 makes the XXZ anisotropy factor undefined.
struct DivisionByZeroError : SimulationError {
    using SimulationError::SimulationError;
};

// Bad run configuration (CLI / config file). Maps to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace spinchain
