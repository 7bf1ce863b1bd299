#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qslice {

using Complex = std::complex<double>;

/// Dense complex matrix, column-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return a_[c * rows_ + r]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return a_[c * rows_ + r]; }

    std::span<Complex> col(std::size_t c) { return {a_.data() + c * rows_, rows_}; }
    std::span<const Complex> col(std::size_t c) const { return {a_.data() + c * rows_, rows_}; }

    ComplexMatrix adjoint() const;
    std::vector<Complex> apply(std::span<const Complex> v) const;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> a_;
};

double norm2(std::span<const Complex> v);

}  // namespace qslice
