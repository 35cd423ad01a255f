#pragma once

#include <array>
#include <complex>
#include <initializer_list>

#include "spinchain/errors.hpp"

namespace spinchain {

using cplx = std::complex<double>;

// Dense square complex matrix with inline storage, row-major. The simulated
// systems live in dimensions 2, 4 and 8; the cap of 8 keeps every matrix a
// flat stack value (no heap traffic in the integrator loop).
class ComplexMatrix {
  public:
    static constexpr int kMaxDim = 8;

    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

    int dim() const { return dim_; }

    cplx& operator()(int row, int col) { return a_[row * dim_ + col]; }
    const cplx& operator()(int row, int col) const { return a_[row * dim_ + col]; }

    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }

    cplx* row(int r) { return a_.data() + r * dim_; }
    const cplx* row(int r) const { return a_.data() + r * dim_; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scalar);

    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;

  private:
    int dim_ = 0;
    alignas(32) std::array<cplx, kMaxDim * kMaxDim> a_{};
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scalar, ComplexMatrix a);

ComplexMatrix adjoint(const ComplexMatrix& a);

// Largest entrywise |a - b|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace spinchain
