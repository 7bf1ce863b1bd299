#pragma once

// Truncated quaternionic Hankel operators, their complex embedding and
// operator norms.
//
// Operators are right H-linear and act by LEFT multiplication of matrix
// entries: (M v)_j = sum_k M_jk v_k.

#include <cstddef>
#include <span>
#include <vector>

#include "qslice/complex_matrix.hpp"
#include "qslice/exec.hpp"
#include "qslice/quaternion.hpp"
#include "qslice/slice_series.hpp"

namespace qslice {

using QuaternionSequence = std::vector<Quaternion>;

class QuaternionMatrix {
public:
    QuaternionMatrix() = default;
    QuaternionMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static QuaternionMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Quaternion& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Quaternion& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    /// Row-major entries.
    std::span<const Quaternion> entries() const { return a_; }

    QuaternionSequence apply(std::span<const Quaternion> v) const;
    /// (M^* w)_k = sum_j conj(M_jk) w_j
    QuaternionSequence apply_adjoint(std::span<const Quaternion> w) const;

    friend QuaternionMatrix operator*(const QuaternionMatrix& a, const QuaternionMatrix& b);
    friend bool operator==(const QuaternionMatrix&, const QuaternionMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Quaternion> a_;
};

/// sqrt(sum |v_k|^2)
double l2_norm(std::span<const Quaternion> v);

/// (Gamma_alpha v)(j) = sum_k alpha(j+k) v(k), for j < alpha.size().
QuaternionSequence apply_gamma(std::span<const Quaternion> alpha, std::span<const Quaternion> v);

/// M[j][k] = alpha(j+k), 0 <= j,k < n; alpha is zero past its end.
QuaternionMatrix build_hankel_matrix(std::span<const Quaternion> alpha, std::size_t n);

class HankelOperator {
public:
    HankelOperator(QuaternionSequence alpha, std::size_t n);

    const QuaternionSequence& alpha() const { return alpha_; }
    std::size_t size() const { return n_; }

    QuaternionMatrix matrix() const { return build_hankel_matrix(alpha_, n_); }
    /// Truncated action: first n components of Gamma_alpha applied to v (size n).
    QuaternionSequence apply(std::span<const Quaternion> v) const;

private:
    QuaternionSequence alpha_;
    std::size_t n_;
};

/// H_phi truncated to n x n: row j <-> frequency -1-j, column k <-> q^k, so
/// entry (j, k) = phi_hat(-1-j-k).
HankelOperator hankel_from_symbol(const SliceLaurentSeries& phi, std::size_t n);

/// H_phi f = P_-(phi * f). Throws PreconditionError if f has negative support.
SliceLaurentSeries apply_H(const SliceLaurentSeries& phi, const SliceLaurentSeries& f);

/// G_alpha(a, b) = sum_n sum_k alpha_{n+k} a_k b_n, multiplied in that order.
Quaternion bilinear_form(std::span<const Quaternion> alpha, std::span<const Quaternion> a,
                         std::span<const Quaternion> b);

/// Entry q = z1 + z2 j (z1 = w + x i, z2 = y + z i) becomes the block
/// [[z1, z2], [-conj(z2), conj(z1)]].
ComplexMatrix complex_embed(const QuaternionMatrix& m);

/// Column vector embedding: entry q becomes (z1, -conj(z2)), the first
/// column of its block. Real-linear bijection H^n -> C^{2n}.
std::vector<Complex> embed_vector(std::span<const Quaternion> v);
QuaternionSequence deembed_vector(std::span<const Complex> v);

struct NormOptions {
    Exec exec = Exec::parallel;
    /// Dense Jacobi SVD is used while the embedded column count is at most this.
    std::size_t jacobi_limit = 256;
    int max_sweeps = 60;
    long max_power_iterations = 200000;
    unsigned long long seed = 7;
};

struct TopSingular {
    double sigma = 0.0;
    QuaternionSequence vector;  ///< unit right singular vector (empty when sigma == 0)
};

/// Largest singular value and a right singular vector of M. Zero rows and
/// columns are stripped first; small cores use dense Jacobi SVD of the complex
/// embedding, larger ones power iteration on M^* M.
TopSingular top_singular(const QuaternionMatrix& m, const NormOptions& options = {});

/// sup ||M v|| / ||v|| over quaternionic vectors.
double operator_norm(const QuaternionMatrix& m, const NormOptions& options = {});

/// (S f)(q) = q f(q): n -> n+1.
SliceLaurentSeries shift_S(const SliceLaurentSeries& f);
/// n -> n-1.
SliceLaurentSeries shift_S_adj(const SliceLaurentSeries& f);
/// Forward shift on H^2; throws PreconditionError on negative support.
SliceLaurentSeries shift_T(const SliceLaurentSeries& f);
/// Backward shift on H^2: q^{-1}(f(q) - f(0)).
SliceLaurentSeries shift_T_adj(const SliceLaurentSeries& f);

/// Frobenius norm of (P_- S R - R T) on the interior block, with rows of R
/// indexing frequencies -1..-N and columns 0..N-1. Zero iff the interior of R
/// has constant antidiagonals.
double commutation_residual(const QuaternionMatrix& r);

}  // namespace qslice
