#pragma once

#include <complex>

namespace spinchain::kernels {

using cplx = std::complex<double>;

// Low-level data-parallel primitives behind the linear algebra layer.
// One scalar reference implementation plus an AVX2/FMA variant; the active
// table is picked at runtime (CPU probe, overridable via SPINCHAIN_KERNELS).
struct Ops {
    // c = a * b          (dim x dim, row-major, c distinct from a and b)
    void (*matmul)(int dim, const cplx* a, const cplx* b, cplx* c);
    // c = adj(a) * b
    void (*matmul_adj_a)(int dim, const cplx* a, const cplx* b, cplx* c);
    // c = a * adj(b)
    void (*matmul_adj_b)(int dim, const cplx* a, const cplx* b, cplx* c);
    // simultaneous plane rotation of two length-n rows:
    //   x' = alpha*x + beta*y,  y' = gamma*x + delta*y
    void (*rotate_pair)(int n, cplx* x, cplx* y, cplx alpha, cplx beta, cplx gamma, cplx delta);
    // w[i*dim+j] = v[i*dim+j] * ph[j]   (right-multiplication by a diagonal)
    void (*scale_columns)(int dim, const cplx* v, const cplx* ph, cplx* w);
};

enum class Backend { kScalar, kAvx2 };

const char* backend_name(Backend b);

// Active operation table (initialized on first use).
const Ops& ops();

Backend active_backend();

// Force a backend; returns false (and leaves the table unchanged) if the
// requested backend is not available on this machine/build.
bool set_backend(Backend b);

bool backend_available(Backend b);

const Ops& scalar_ops();

}  // namespace spinchain::kernels
