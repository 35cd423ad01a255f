// Test-only reference implementations, kept independent of the library code
// paths they are used to check.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "spinchain/complex_matrix.hpp"
#include "spinchain/evolve.hpp"
#include "spinchain/model.hpp"

namespace oracles {

using spinchain::ChainParams;
using spinchain::ComplexMatrix;
using spinchain::cplx;

// Kronecker product straight from the index formula.
inline ComplexMatrix kron_by_index(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim(), db = b.dim();
    ComplexMatrix r(da * db);
    for (int i = 0; i < da * db; ++i)
        for (int j = 0; j < da * db; ++j) r(i, j) = a(i / db, j / db) * b(i % db, j % db);
    return r;
}

// Eigenvalues of a small Hermitian matrix via the characteristic polynomial:
// Faddeev-LeVerrier coefficients followed by bisection between Gershgorin
// bounds. Plain double arithmetic, no eigensolver involved.
inline std::vector<double> charpoly_eigenvalues(const ComplexMatrix& h) {
    const int n = h.dim();
    // c[0] lambda^n + c[1] lambda^(n-1) + ... + c[n], c[0] = 1
    std::vector<cplx> c(n + 1, cplx(0.0, 0.0));
    c[0] = 1.0;
    ComplexMatrix mk(n);  // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        // M_k = A * (M_{k-1} + c_{k-1} I)
        ComplexMatrix t = mk;
        for (int i = 0; i < n; ++i) t(i, i) += c[k - 1];
        ComplexMatrix next(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                cplx acc(0.0, 0.0);
                for (int p = 0; p < n; ++p) acc += h(i, p) * t(p, j);
                next(i, j) = acc;
            }
        mk = next;
        cplx tr(0.0, 0.0);
        for (int i = 0; i < n; ++i) tr += mk(i, i);
        c[k] = -tr / static_cast<double>(k);
    }
    auto poly = [&](double x) {
        double v = 1.0;
        for (int k = 1; k <= n; ++k) v = v * x + c[k].real();
        return v;
    };
    // Gershgorin interval
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i < n; ++i) {
        double radius = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) radius += std::abs(h(i, j));
        lo = std::min(lo, h(i, i).real() - radius);
        hi = std::max(hi, h(i, i).real() + radius);
    }
    // bisection on sign changes over a fine scan
    std::vector<double> roots;
    const int scan = 20000;
    double prev_x = lo - 1e-9, prev_v = poly(prev_x);
    for (int s = 1; s <= scan; ++s) {
        const double x = lo + (hi - lo + 2e-9) * s / scan - 1e-9;
        const double v = poly(x);
        if (prev_v == 0.0) roots.push_back(prev_x);
        if (prev_v * v < 0.0) {
            double a = prev_x, b = x;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (a + b);
                if (poly(a) * poly(mid) <= 0.0)
                    b = mid;
                else
                    a = mid;
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev_v = v;
    }
    return roots;
}

// Classic fourth-order Runge-Kutta on U' = -i H(t) U, as an integrator
// reference independent of the exponential-midpoint scheme.
inline ComplexMatrix rk4_propagator(const ChainParams& p, double t_final, int steps) {
    const ComplexMatrix h0 = spinchain::static_hamiltonian(p);
    const int dim = h0.dim();
    const double dt = t_final / steps;

    auto h_at = [&](double t) {
        ComplexMatrix h = h0;
        const double om = spinchain::drive_amplitude(p, t);
        for (int i = 0; i < dim; ++i) h(i, i ^ 1) += om;
        return h;
    };
    auto deriv = [&](double t, const ComplexMatrix& u) {
        ComplexMatrix d = h_at(t) * u;
        d *= cplx(0.0, -1.0);
        return d;
    };

    ComplexMatrix u = ComplexMatrix::identity(dim);
    for (int s = 0; s < steps; ++s) {
        const double t = s * dt;
        const ComplexMatrix k1 = deriv(t, u);
        ComplexMatrix u2 = u;
        u2 += cplx(dt / 2.0, 0.0) * k1;
        const ComplexMatrix k2 = deriv(t + dt / 2.0, u2);
        ComplexMatrix u3 = u;
        u3 += cplx(dt / 2.0, 0.0) * k2;
        const ComplexMatrix k3 = deriv(t + dt / 2.0, u3);
        ComplexMatrix u4 = u;
        u4 += cplx(dt, 0.0) * k3;
        const ComplexMatrix k4 = deriv(t + dt, u4);

        ComplexMatrix inc = k1;
        inc += cplx(2.0, 0.0) * k2;
        inc += cplx(2.0, 0.0) * k3;
        inc += k4;
        u += cplx(dt / 6.0, 0.0) * inc;
    }
    return u;
}

// Seeded random Hermitian matrix with entries of order one.
inline ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix h(dim);
    for (int i = 0; i < dim; ++i) {
        h(i, i) = u(rng);
        for (int j = i + 1; j < dim; ++j) {
            h(i, j) = cplx(u(rng), u(rng));
            h(j, i) = std::conj(h(i, j));
        }
    }
    return h;
}

}  // namespace oracles
