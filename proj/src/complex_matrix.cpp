#include "qslice/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qslice {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (std::size_t r = 0; r < rows_; ++r) t(c, r) = std::conj((*this)(r, c));
    return t;
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != cols_) throw std::invalid_argument("ComplexMatrix::apply: size mismatch");
    std::vector<Complex> out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        const Complex vc = v[c];
        if (vc == Complex{}) continue;
        const auto column = col(c);
        for (std::size_t r = 0; r < rows_; ++r) out[r] += column[r] * vc;
    }
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("ComplexMatrix product: size mismatch");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex bk = b(k, c);
            if (bk == Complex{}) continue;
            for (std::size_t r = 0; r < a.rows(); ++r) out(r, c) += a(r, k) * bk;
        }
    return out;
}

double norm2(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

}  // namespace qslice
