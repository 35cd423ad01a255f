#include "spinchain/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spinchain/kernels.hpp"

namespace spinchain {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim(), db = b.dim();
    if (da * db > ComplexMatrix::kMaxDim)
        throw DimensionError("kron result dimension " + std::to_string(da * db) +
                             " exceeds supported maximum " + std::to_string(ComplexMatrix::kMaxDim));
    ComplexMatrix r(da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            const cplx aij = a(i, j);
            for (int p = 0; p < db; ++p)
                for (int q = 0; q < db; ++q) r(i * db + p, j * db + q) = aij * b(p, q);
        }
    return r;
}

namespace {

constexpr int kMaxSweeps = 50;
constexpr double kOffTolRel = 1e-13;   // vs ||H||_F
constexpr double kHermTolRel = 1e-12;  // vs max|H|

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

void check_hermitian(const ComplexMatrix& h) {
    double worst = 0.0;
    for (int i = 0; i < h.dim(); ++i)
        for (int j = i; j < h.dim(); ++j)
            worst = std::max(worst, std::abs(h(i, j) - std::conj(h(j, i))));
    if (worst > kHermTolRel * std::max(h.max_abs(), 1e-300))
        throw NotHermitianError("herm_eig: input is not Hermitian (defect " + std::to_string(worst) + ")");
}

// One Jacobi rotation annihilating a(p,q), accumulated into the transposed
// eigenvector matrix w (rows of w are columns of V).
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& w, int p, int q) {
    const int dim = a.dim();
    const cplx apq = a(p, q);
    const double r = std::abs(apq);
    const cplx phase = apq / r;  // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double tau = (aqq - app) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // A <- J^dag A J with J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] in the
    // (p,q) plane. Row pass then column pass; Hermiticity is preserved.
    auto& kern = kernels::ops();
    kern.rotate_pair(dim, a.row(p), a.row(q), cplx(c, 0.0), -s * phase, cplx(s, 0.0), c * phase);
    const cplx cphase = std::conj(phase);
    for (int i = 0; i < dim; ++i) {
        const cplx aip = a(i, p);
        const cplx aiq = a(i, q);
        a(i, p) = c * aip - s * cphase * aiq;
        a(i, q) = s * aip + c * cphase * aiq;
    }
    // scrub rotation-plane roundoff: the pivot is zero by construction
    a(p, q) = cplx(0.0, 0.0);
    a(q, p) = cplx(0.0, 0.0);
    a(p, p) = cplx(a(p, p).real(), 0.0);
    a(q, q) = cplx(a(q, q).real(), 0.0);

    kern.rotate_pair(dim, w.row(p), w.row(q), cplx(c, 0.0), -s * cphase, cplx(s, 0.0), c * cphase);
}

}  // namespace

EigenDecomposition herm_eig(const ComplexMatrix& h) {
    const int dim = h.dim();
    if (dim < 1) throw DimensionError("herm_eig: empty matrix");
    check_hermitian(h);

    ComplexMatrix a = h;
    ComplexMatrix w = ComplexMatrix::identity(dim);  // transposed eigenvectors
    const double norm_h = h.frobenius_norm();
    const double off_tol = kOffTolRel * norm_h;

    bool converged = (dim == 1) || norm_h == 0.0;
    for (int sweep = 0; !converged && sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= off_tol) {
            converged = true;
            break;
        }
        // skip pivots that cannot move the off-norm past the tolerance
        const double skip = off_tol / (dim * dim);
        for (int p = 0; p < dim - 1; ++p)
            for (int q = p + 1; q < dim; ++q)
                if (std::abs(a(p, q)) > skip) jacobi_rotate(a, w, p, q);
    }
    if (!converged && off_diagonal_norm(a) > off_tol)
        throw NoConvergenceError("herm_eig: sweep budget exhausted");

    std::vector<int> order(dim);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out;
    out.eigenvalues.resize(dim);
    out.eigenvectors = ComplexMatrix(dim);
    for (int j = 0; j < dim; ++j) {
        const int src = order[j];
        out.eigenvalues[j] = a(src, src).real();
        // column j of V = row `src` of w, phase-fixed on its largest entry
        int imax = 0;
        double best = -1.0;
        for (int i = 0; i < dim; ++i) {
            const double mag = std::abs(w(src, i));
            if (mag > best) {
                best = mag;
                imax = i;
            }
        }
        const cplx ph = std::conj(w(src, imax)) / best;
        for (int i = 0; i < dim; ++i) out.eigenvectors(i, j) = w(src, i) * ph;
    }
    return out;
}

ComplexMatrix expm_i(const ComplexMatrix& h, double s) {
    const EigenDecomposition eig = herm_eig(h);
    const int dim = h.dim();
    std::array<cplx, ComplexMatrix::kMaxDim> phases;
    for (int j = 0; j < dim; ++j) phases[j] = std::polar(1.0, -s * eig.eigenvalues[j]);
    ComplexMatrix scaled(dim);
    kernels::ops().scale_columns(dim, eig.eigenvectors.data(), phases.data(), scaled.data());
    ComplexMatrix u(dim);
    kernels::ops().matmul_adj_b(dim, scaled.data(), eig.eigenvectors.data(), u.data());
    return u;
}

double unitarity_defect(const ComplexMatrix& u) {
    const int dim = u.dim();
    ComplexMatrix g(dim);
    kernels::ops().matmul_adj_a(dim, u.data(), u.data(), g.data());
    double worst = 0.0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const cplx expect = (i == j) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
            worst = std::max(worst, std::abs(g(i, j) - expect));
        }
    return worst;
}

}  // namespace spinchain
