// AVX2/FMA variants of the complex kernels. Two complex doubles per ymm
// register, interleaved (re, im). Compiled with -mavx2 -mfma; selected at
// runtime only when the CPU reports both features.

#include "spinchain/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define SPINCHAIN_HAVE_AVX2_BUILD 1
#include <immintrin.h>
#else
#define SPINCHAIN_HAVE_AVX2_BUILD 0
#endif

namespace spinchain::kernels {

#if SPINCHAIN_HAVE_AVX2_BUILD

namespace avx2 {

constexpr int kMaxChunks = 4;  // up to dim 8, two complex per chunk

inline const double* dp(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* dp(cplx* p) { return reinterpret_cast<double*>(p); }

// (s_re, s_im broadcast) * v for two packed complex values.
inline __m256d cmul_scalar_vec(__m256d s_re, __m256d s_im, __m256d v) {
    __m256d v_swap = _mm256_permute_pd(v, 0b0101);
    return _mm256_fmaddsub_pd(s_re, v, _mm256_mul_pd(s_im, v_swap));
}

// acc + s*v
inline __m256d cfma_scalar_vec(__m256d acc, __m256d s_re, __m256d s_im, __m256d v) {
    return _mm256_add_pd(acc, cmul_scalar_vec(s_re, s_im, v));
}

// elementwise complex product a*b of two packed pairs
inline __m256d cmul_vec_vec(__m256d a, __m256d b) {
    __m256d a_re = _mm256_movedup_pd(a);
    __m256d a_im = _mm256_permute_pd(a, 0b1111);
    __m256d b_swap = _mm256_permute_pd(b, 0b0101);
    return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_swap));
}

void matmul(int dim, const cplx* a, const cplx* b, cplx* c) {
    if (dim % 2 != 0) {
        scalar_ops().matmul(dim, a, b, c);
        return;
    }
    const int chunks = dim / 2;
    __m256d acc[kMaxChunks];
    for (int i = 0; i < dim; ++i) {
        for (int v = 0; v < chunks; ++v) acc[v] = _mm256_setzero_pd();
        for (int k = 0; k < dim; ++k) {
            const cplx aik = a[i * dim + k];
            const __m256d s_re = _mm256_set1_pd(aik.real());
            const __m256d s_im = _mm256_set1_pd(aik.imag());
            const double* bk = dp(b + k * dim);
            for (int v = 0; v < chunks; ++v)
                acc[v] = cfma_scalar_vec(acc[v], s_re, s_im, _mm256_loadu_pd(bk + 4 * v));
        }
        double* ci = dp(c + i * dim);
        for (int v = 0; v < chunks; ++v) _mm256_storeu_pd(ci + 4 * v, acc[v]);
    }
}

void matmul_adj_a(int dim, const cplx* a, const cplx* b, cplx* c) {
    if (dim % 2 != 0) {
        scalar_ops().matmul_adj_a(dim, a, b, c);
        return;
    }
    const int chunks = dim / 2;
    __m256d acc[kMaxChunks];
    for (int i = 0; i < dim; ++i) {
        for (int v = 0; v < chunks; ++v) acc[v] = _mm256_setzero_pd();
        for (int k = 0; k < dim; ++k) {
            const cplx aki = a[k * dim + i];
            const __m256d s_re = _mm256_set1_pd(aki.real());
            const __m256d s_im = _mm256_set1_pd(-aki.imag());
            const double* bk = dp(b + k * dim);
            for (int v = 0; v < chunks; ++v)
                acc[v] = cfma_scalar_vec(acc[v], s_re, s_im, _mm256_loadu_pd(bk + 4 * v));
        }
        double* ci = dp(c + i * dim);
        for (int v = 0; v < chunks; ++v) _mm256_storeu_pd(ci + 4 * v, acc[v]);
    }
}

void matmul_adj_b(int dim, const cplx* a, const cplx* b, cplx* c) {
    if (dim % 2 != 0) {
        scalar_ops().matmul_adj_b(dim, a, b, c);
        return;
    }
    const int chunks = dim / 2;
    for (int i = 0; i < dim; ++i) {
        const double* ai = dp(a + i * dim);
        for (int j = 0; j < dim; ++j) {
            const double* bj = dp(b + j * dim);
            __m256d acc = _mm256_setzero_pd();
            for (int v = 0; v < chunks; ++v) {
                const __m256d av = _mm256_loadu_pd(ai + 4 * v);
                const __m256d bv = _mm256_loadu_pd(bj + 4 * v);
                // even lanes re_a*re_b + im_a*im_b, odd lanes re_a*im_b - im_a*re_b
                const __m256d a_re = _mm256_movedup_pd(av);
                const __m256d a_im = _mm256_permute_pd(av, 0b1111);
                const __m256d b_swap = _mm256_permute_pd(bv, 0b0101);
                acc = _mm256_add_pd(acc, _mm256_fmsubadd_pd(a_re, bv, _mm256_mul_pd(a_im, b_swap)));
            }
            const __m128d lo = _mm256_castpd256_pd128(acc);
            const __m128d hi = _mm256_extractf128_pd(acc, 1);
            const __m128d sum = _mm_add_pd(lo, hi);
            double re = _mm_cvtsd_f64(sum);
            double im = -_mm_cvtsd_f64(_mm_unpackhi_pd(sum, sum));
            c[i * dim + j] = cplx(re, im);
        }
    }
}

void rotate_pair(int n, cplx* x, cplx* y, cplx alpha, cplx beta, cplx gamma, cplx delta) {
    const __m256d ar = _mm256_set1_pd(alpha.real()), ai = _mm256_set1_pd(alpha.imag());
    const __m256d br = _mm256_set1_pd(beta.real()), bi = _mm256_set1_pd(beta.imag());
    const __m256d gr = _mm256_set1_pd(gamma.real()), gi = _mm256_set1_pd(gamma.imag());
    const __m256d dr = _mm256_set1_pd(delta.real()), di = _mm256_set1_pd(delta.imag());
    int j = 0;
    for (; j + 2 <= n; j += 2) {
        const __m256d xv = _mm256_loadu_pd(dp(x + j));
        const __m256d yv = _mm256_loadu_pd(dp(y + j));
        __m256d nx = cmul_scalar_vec(ar, ai, xv);
        nx = cfma_scalar_vec(nx, br, bi, yv);
        __m256d ny = cmul_scalar_vec(gr, gi, xv);
        ny = cfma_scalar_vec(ny, dr, di, yv);
        _mm256_storeu_pd(dp(x + j), nx);
        _mm256_storeu_pd(dp(y + j), ny);
    }
    for (; j < n; ++j) {
        const cplx xj = x[j], yj = y[j];
        x[j] = alpha * xj + beta * yj;
        y[j] = gamma * xj + delta * yj;
    }
}

void scale_columns(int dim, const cplx* v, const cplx* ph, cplx* w) {
    if (dim % 2 != 0) {
        scalar_ops().scale_columns(dim, v, ph, w);
        return;
    }
    const int chunks = dim / 2;
    for (int i = 0; i < dim; ++i) {
        const double* vi = dp(v + i * dim);
        double* wi = dp(w + i * dim);
        for (int c = 0; c < chunks; ++c) {
            const __m256d vv = _mm256_loadu_pd(vi + 4 * c);
            const __m256d pv = _mm256_loadu_pd(dp(ph) + 4 * c);
            _mm256_storeu_pd(wi + 4 * c, cmul_vec_vec(vv, pv));
        }
    }
}

}  // namespace avx2

const Ops* avx2_ops_if_built() {
    static const Ops table{
        avx2::matmul, avx2::matmul_adj_a, avx2::matmul_adj_b,
        avx2::rotate_pair, avx2::scale_columns,
    };
    return &table;
}

#else

const Ops* avx2_ops_if_built() { return nullptr; }

#endif  // SPINCHAIN_HAVE_AVX2_BUILD

}  // namespace spinchain::kernels
