#include <random>
#include <vector>

#include "doctest.h"
#include "spinchain/kernels.hpp"

namespace {

using spinchain::kernels::Backend;
using cplx = std::complex<double>;

std::vector<cplx> random_block(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& x : v) x = cplx(u(rng), u(rng));
    return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

struct BackendGuard {
    Backend saved = spinchain::kernels::active_backend();
    ~BackendGuard() { spinchain::kernels::set_backend(saved); }
};

}  // namespace

TEST_CASE("matmul agrees with a naive triple loop") {
    std::mt19937_64 rng(7);
    for (int dim : {2, 3, 4, 5, 8}) {
        const auto a = random_block(dim * dim, rng);
        const auto b = random_block(dim * dim, rng);
        std::vector<cplx> expect(dim * dim, cplx(0, 0));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k)
                    expect[i * dim + j] += a[i * dim + k] * b[k * dim + j];

        std::vector<cplx> got(dim * dim);
        spinchain::kernels::ops().matmul(dim, a.data(), b.data(), got.data());
        CHECK(max_diff(expect, got) < 1e-13 * dim);
    }
}

TEST_CASE("avx2 variants match the scalar reference") {
    if (!spinchain::kernels::backend_available(Backend::kAvx2)) return;
    BackendGuard guard;
    const auto& scalar = spinchain::kernels::scalar_ops();
    REQUIRE(spinchain::kernels::set_backend(Backend::kAvx2));
    const auto& simd = spinchain::kernels::ops();

    std::mt19937_64 rng(20240501);
    for (int rep = 0; rep < 50; ++rep) {
        for (int dim : {2, 3, 4, 5, 6, 7, 8}) {
            const auto a = random_block(dim * dim, rng);
            const auto b = random_block(dim * dim, rng);
            std::vector<cplx> r1(dim * dim), r2(dim * dim);
            const double tol = 1e-13 * dim;

            scalar.matmul(dim, a.data(), b.data(), r1.data());
            simd.matmul(dim, a.data(), b.data(), r2.data());
            CHECK(max_diff(r1, r2) < tol);

            scalar.matmul_adj_a(dim, a.data(), b.data(), r1.data());
            simd.matmul_adj_a(dim, a.data(), b.data(), r2.data());
            CHECK(max_diff(r1, r2) < tol);

            scalar.matmul_adj_b(dim, a.data(), b.data(), r1.data());
            simd.matmul_adj_b(dim, a.data(), b.data(), r2.data());
            CHECK(max_diff(r1, r2) < tol);

            const auto coeff = random_block(4, rng);
            auto x1 = random_block(dim, rng), y1 = random_block(dim, rng);
            auto x2 = x1, y2 = y1;
            scalar.rotate_pair(dim, x1.data(), y1.data(), coeff[0], coeff[1], coeff[2], coeff[3]);
            simd.rotate_pair(dim, x2.data(), y2.data(), coeff[0], coeff[1], coeff[2], coeff[3]);
            CHECK(max_diff(x1, x2) < tol);
            CHECK(max_diff(y1, y2) < tol);

            const auto ph = random_block(dim, rng);
            scalar.scale_columns(dim, a.data(), ph.data(), r1.data());
            simd.scale_columns(dim, a.data(), ph.data(), r2.data());
            CHECK(max_diff(r1, r2) < tol);
        }
    }
}

TEST_CASE("backend selection round-trips") {
    BackendGuard guard;
    REQUIRE(spinchain::kernels::set_backend(Backend::kScalar));
    CHECK(spinchain::kernels::active_backend() == Backend::kScalar);
    if (spinchain::kernels::backend_available(Backend::kAvx2)) {
        REQUIRE(spinchain::kernels::set_backend(Backend::kAvx2));
        CHECK(spinchain::kernels::active_backend() == Backend::kAvx2);
    }
    CHECK(spinchain::kernels::backend_name(spinchain::kernels::active_backend()) != nullptr);
}
