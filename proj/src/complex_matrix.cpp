#include "spinchain/complex_matrix.hpp"

#include <cmath>

#include "spinchain/kernels.hpp"

namespace spinchain {

namespace {
void check_dim(int dim) {
    if (dim < 1 || dim > ComplexMatrix::kMaxDim)
        throw DimensionError("matrix dimension " + std::to_string(dim) + " outside supported range [1, " +
                             std::to_string(ComplexMatrix::kMaxDim) + "]");
}
void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim())
        throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
}
}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    check_dim(dim);
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = cplx(1.0, 0.0);
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    const int dim = static_cast<int>(rows.size());
    ComplexMatrix m(dim);
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim) throw DimensionError("from_rows: ragged row list");
        int c = 0;
        for (const cplx& v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    check_same_dim(*this, other);
    const int n = dim_ * dim_;
    for (int i = 0; i < n; ++i) a_[i] += other.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    check_same_dim(*this, other);
    const int n = dim_ * dim_;
    for (int i = 0; i < n; ++i) a_[i] -= other.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
    const int n = dim_ * dim_;
    for (int i = 0; i < n; ++i) a_[i] *= scalar;
    return *this;
}

cplx ComplexMatrix::trace() const {
    cplx t(0.0, 0.0);
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    const int n = dim_ * dim_;
    for (int i = 0; i < n; ++i) s += std::norm(a_[i]);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    const int n = dim_ * dim_;
    for (int i = 0; i < n; ++i) m = std::max(m, std::abs(a_[i]));
    return m;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b);
    ComplexMatrix c(a.dim());
    kernels::ops().matmul(a.dim(), a.data(), b.data(), c.data());
    return c;
}

ComplexMatrix operator*(cplx scalar, ComplexMatrix a) { return a *= scalar; }

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b);
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

}  // namespace spinchain
