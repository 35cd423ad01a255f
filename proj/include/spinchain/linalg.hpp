#pragma once

#include <vector>

#include "spinchain/complex_matrix.hpp"

namespace spinchain {

// Eigenvalues ascending; eigenvector j is column j of `eigenvectors`. Each
// column's phase is fixed so its largest-magnitude entry is real positive
// (deterministic snapshots; degenerate subspaces get an arbitrary but
// reproducible orthonormal basis).
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Kronecker product with standard block ordering: a(i,j)*b occupies block (i,j).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Cyclic complex Jacobi on a Hermitian matrix. Throws NotHermitianError if
// max|h(i,j) - conj(h(j,i))| > 1e-12 * max|h|, NoConvergenceError if the
// off-diagonal Frobenius norm has not dropped below 1e-13 * ||h||_F within
// 50 sweeps.
EigenDecomposition herm_eig(const ComplexMatrix& h);

// exp(-i*s*h) for Hermitian h, via herm_eig: V diag(exp(-i s lambda)) V^dag.
ComplexMatrix expm_i(const ComplexMatrix& h, double s);

// max entrywise |U^dag U - 1|; zero iff exactly unitary.
double unitarity_defect(const ComplexMatrix& u);

}  // namespace spinchain
