#include "qslice/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qslice/errors.hpp"
#include "qslice/kernels.hpp"

namespace qslice {

QuaternionMatrix QuaternionMatrix::identity(std::size_t n) {
    QuaternionMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Quaternion::one();
    return m;
}

QuaternionSequence QuaternionMatrix::apply(std::span<const Quaternion> v) const {
    if (v.size() != cols_) throw std::invalid_argument("QuaternionMatrix::apply: size mismatch");
    QuaternionSequence out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Quaternion acc;
        for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

QuaternionSequence QuaternionMatrix::apply_adjoint(std::span<const Quaternion> w) const {
    if (w.size() != rows_) throw std::invalid_argument("QuaternionMatrix::apply_adjoint: size mismatch");
    QuaternionSequence out(cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const Quaternion wr = w[r];
        for (std::size_t c = 0; c < cols_; ++c) out[c] += conj((*this)(r, c)) * wr;
    }
    return out;
}

QuaternionMatrix operator*(const QuaternionMatrix& a, const QuaternionMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("QuaternionMatrix product: size mismatch");
    QuaternionMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Quaternion ark = a(r, k);
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
        }
    return out;
}

double l2_norm(std::span<const Quaternion> v) {
    double s = 0.0;
    for (const auto& q : v) s += q.norm2();
    return std::sqrt(s);
}

QuaternionSequence apply_gamma(std::span<const Quaternion> alpha, std::span<const Quaternion> v) {
    QuaternionSequence out(alpha.size());
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        Quaternion acc;
        for (std::size_t k = 0; k < v.size() && j + k < alpha.size(); ++k) acc += alpha[j + k] * v[k];
        out[j] = acc;
    }
    return out;
}

QuaternionMatrix build_hankel_matrix(std::span<const Quaternion> alpha, std::size_t n) {
    if (n < 1) throw ParameterError("build_hankel_matrix: size must be positive");
    QuaternionMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (j + k < alpha.size()) m(j, k) = alpha[j + k];
    return m;
}

HankelOperator::HankelOperator(QuaternionSequence alpha, std::size_t n)
    : alpha_(std::move(alpha)), n_(n) {
    if (n_ < 1) throw ParameterError("HankelOperator: size must be positive");
}

QuaternionSequence HankelOperator::apply(std::span<const Quaternion> v) const {
    return matrix().apply(v);
}

HankelOperator hankel_from_symbol(const SliceLaurentSeries& phi, std::size_t n) {
    if (n < 1) throw ParameterError("hankel_from_symbol: size must be positive");
    QuaternionSequence alpha(2 * n - 1);
    for (std::size_t m = 0; m < alpha.size(); ++m) alpha[m] = phi.coeff(-1 - static_cast<int>(m));
    return {std::move(alpha), n};
}

SliceLaurentSeries apply_H(const SliceLaurentSeries& phi, const SliceLaurentSeries& f) {
    if (!f.is_zero() && f.n_min() < 0)
        throw PreconditionError("apply_H: input must lie in H^2 (support n >= 0)");
    return project_minus(star_mul(phi, f));
}

Quaternion bilinear_form(std::span<const Quaternion> alpha, std::span<const Quaternion> a,
                         std::span<const Quaternion> b) {
    Quaternion acc;
    for (std::size_t n = 0; n < b.size(); ++n)
        for (std::size_t k = 0; k < a.size(); ++k)
            if (n + k < alpha.size()) acc += alpha[n + k] * a[k] * b[n];
    return acc;
}

ComplexMatrix complex_embed(const QuaternionMatrix& m) {
    ComplexMatrix out(2 * m.rows(), 2 * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Quaternion& q = m(r, c);
            const Complex z1{q.w, q.x};
            const Complex z2{q.y, q.z};
            out(2 * r, 2 * c) = z1;
            out(2 * r, 2 * c + 1) = z2;
            out(2 * r + 1, 2 * c) = -std::conj(z2);
            out(2 * r + 1, 2 * c + 1) = std::conj(z1);
        }
    return out;
}

std::vector<Complex> embed_vector(std::span<const Quaternion> v) {
    std::vector<Complex> out(2 * v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        out[2 * k] = {v[k].w, v[k].x};
        out[2 * k + 1] = -std::conj(Complex{v[k].y, v[k].z});
    }
    return out;
}

QuaternionSequence deembed_vector(std::span<const Complex> v) {
    if (v.size() % 2 != 0) throw std::invalid_argument("deembed_vector: odd length");
    QuaternionSequence out(v.size() / 2);
    for (std::size_t k = 0; k < out.size(); ++k) {
        const Complex z1 = v[2 * k];
        const Complex z2 = -std::conj(v[2 * k + 1]);
        out[k] = {z1.real(), z1.imag(), z2.real(), z2.imag()};
    }
    return out;
}

namespace {

TopSingular power_iteration(const QuaternionMatrix& m, const NormOptions& options) {
    std::mt19937_64 rng(options.seed);
    QuaternionSequence v(m.cols());
    for (auto& q : v) q = sample_unit_quaternion(rng);
    auto normalize = [](QuaternionSequence& x) {
        const double n = l2_norm(x);
        for (auto& q : x) q *= 1.0 / n;
        return n;
    };
    normalize(v);

    for (long it = 0; it < options.max_power_iterations; ++it) {
        const auto w = m.apply(v);
        const double sigma2 = l2_norm(w) * l2_norm(w);
        auto u = m.apply_adjoint(w);
        if (sigma2 == 0.0) return {};
        double resid = 0.0;
        for (std::size_t k = 0; k < u.size(); ++k) resid += (u[k] - v[k] * sigma2).norm2();
        resid = std::sqrt(resid);
        normalize(u);
        v = std::move(u);
        if (resid <= 1e-9 * sigma2) {
            const double sigma = l2_norm(m.apply(v));
            return {sigma, std::move(v)};
        }
    }
    throw NumericError("operator_norm: power iteration did not converge in " +
                       std::to_string(options.max_power_iterations) + " iterations");
}

}  // namespace

TopSingular top_singular(const QuaternionMatrix& m, const NormOptions& options) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!(m(r, c) == Quaternion{})) {
                rows.push_back(r);
                break;
            }
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!(m(r, c) == Quaternion{})) {
                cols.push_back(c);
                break;
            }
    if (rows.empty()) return {};

    QuaternionMatrix core(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) core(r, c) = m(rows[r], cols[c]);

    TopSingular top;
    if (2 * core.cols() <= options.jacobi_limit) {
        auto svd = kernels::jacobi_svd(complex_embed(core), options.exec, options.max_sweeps);
        top.sigma = svd.sigma.front();
        const auto v = svd.v.col(0);
        top.vector = deembed_vector(std::vector<Complex>(v.begin(), v.end()));
    } else {
        top = power_iteration(core, options);
    }

    QuaternionSequence full(m.cols());
    for (std::size_t c = 0; c < cols.size(); ++c) full[cols[c]] = top.vector[c];
    top.vector = std::move(full);
    return top;
}

double operator_norm(const QuaternionMatrix& m, const NormOptions& options) {
    return top_singular(m, options).sigma;
}

SliceLaurentSeries shift_S(const SliceLaurentSeries& f) {
    return SliceLaurentSeries::from_dense(f.n_min() + 1, {f.dense().begin(), f.dense().end()});
}

SliceLaurentSeries shift_S_adj(const SliceLaurentSeries& f) {
    return SliceLaurentSeries::from_dense(f.n_min() - 1, {f.dense().begin(), f.dense().end()});
}

SliceLaurentSeries shift_T(const SliceLaurentSeries& f) {
    if (!f.is_zero() && f.n_min() < 0) throw PreconditionError("shift_T: input must lie in H^2");
    return shift_S(f);
}

SliceLaurentSeries shift_T_adj(const SliceLaurentSeries& f) {
    if (!f.is_zero() && f.n_min() < 0) throw PreconditionError("shift_T_adj: input must lie in H^2");
    SliceLaurentSeries g = f;
    g.set(0, {});
    return shift_S_adj(g);
}

double commutation_residual(const QuaternionMatrix& r) {
    if (r.rows() != r.cols()) throw ParameterError("commutation_residual: matrix must be square");
    const std::size_t n = r.rows();
    double s = 0.0;
    // (P_- S R)(j, k) = R(j+1, k) and (R T)(j, k) = R(j, k+1)
    for (std::size_t j = 0; j + 1 < n; ++j)
        for (std::size_t k = 0; k + 1 < n; ++k) s += (r(j + 1, k) - r(j, k + 1)).norm2();
    return std::sqrt(s);
}

}  // namespace qslice
