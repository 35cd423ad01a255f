#include "spinchain/kernels.hpp"

namespace spinchain::kernels {
namespace scalar {

void matmul(int dim, const cplx* a, const cplx* b, cplx* c) {
    for (int i = 0; i < dim; ++i) {
        cplx* ci = c + i * dim;
        for (int j = 0; j < dim; ++j) ci[j] = cplx(0.0, 0.0);
        for (int k = 0; k < dim; ++k) {
            const cplx aik = a[i * dim + k];
            const cplx* bk = b + k * dim;
            for (int j = 0; j < dim; ++j) ci[j] += aik * bk[j];
        }
    }
}

void matmul_adj_a(int dim, const cplx* a, const cplx* b, cplx* c) {
    for (int i = 0; i < dim; ++i) {
        cplx* ci = c + i * dim;
        for (int j = 0; j < dim; ++j) ci[j] = cplx(0.0, 0.0);
        for (int k = 0; k < dim; ++k) {
            const cplx aki = std::conj(a[k * dim + i]);
            const cplx* bk = b + k * dim;
            for (int j = 0; j < dim; ++j) ci[j] += aki * bk[j];
        }
    }
}

void matmul_adj_b(int dim, const cplx* a, const cplx* b, cplx* c) {
    for (int i = 0; i < dim; ++i) {
        const cplx* ai = a + i * dim;
        cplx* ci = c + i * dim;
        for (int j = 0; j < dim; ++j) {
            const cplx* bj = b + j * dim;
            cplx acc(0.0, 0.0);
            for (int k = 0; k < dim; ++k) acc += ai[k] * std::conj(bj[k]);
            ci[j] = acc;
        }
    }
}

void rotate_pair(int n, cplx* x, cplx* y, cplx alpha, cplx beta, cplx gamma, cplx delta) {
    for (int j = 0; j < n; ++j) {
        const cplx xj = x[j];
        const cplx yj = y[j];
        x[j] = alpha * xj + beta * yj;
        y[j] = gamma * xj + delta * yj;
    }
}

void scale_columns(int dim, const cplx* v, const cplx* ph, cplx* w) {
    for (int i = 0; i < dim; ++i) {
        const cplx* vi = v + i * dim;
        cplx* wi = w + i * dim;
        for (int j = 0; j < dim; ++j) wi[j] = vi[j] * ph[j];
    }
}

}  // namespace scalar

const Ops& scalar_ops() {
    static const Ops table{
        scalar::matmul, scalar::matmul_adj_a, scalar::matmul_adj_b,
        scalar::rotate_pair, scalar::scale_columns,
    };
    return table;
}

}  // namespace spinchain::kernels
