#pragma once

// Finite-support quaternionic Laurent series f(q) = sum_n q^n a_n on the
// boundary of the unit ball, with the star-algebra, the Hardy projections and
// the L^2 / L^inf / BMO norms.

#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "qslice/exec.hpp"
#include "qslice/quaternion.hpp"

namespace qslice {

class SliceLaurentSeries {
public:
    SliceLaurentSeries() = default;
    SliceLaurentSeries(std::initializer_list<std::pair<int, Quaternion>> terms);

    /// q^n c
    static SliceLaurentSeries monomial(int n, const Quaternion& c);
    /// Coefficients coeffs[k] at index lo + k.
    static SliceLaurentSeries from_dense(int lo, std::vector<Quaternion> coeffs);

    Quaternion coeff(int n) const;
    void set(int n, const Quaternion& c);
    void add(int n, const Quaternion& c);

    bool is_zero() const { return c_.empty(); }
    /// Support bounds of the nonzero coefficients; an empty range (0, -1) for zero.
    int n_min() const { return lo_; }
    int n_max() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    /// max |n| over the support (0 for the zero series).
    int max_abs_index() const;

    /// Dense view of the coefficients from n_min() to n_max().
    std::span<const Quaternion> dense() const { return c_; }

    SliceLaurentSeries& operator+=(const SliceLaurentSeries& o);
    SliceLaurentSeries& operator-=(const SliceLaurentSeries& o);

    friend SliceLaurentSeries operator+(SliceLaurentSeries a, const SliceLaurentSeries& b) {
        return a += b;
    }
    friend SliceLaurentSeries operator-(SliceLaurentSeries a, const SliceLaurentSeries& b) {
        return a -= b;
    }
    /// Right scalar multiplication, f(q) c.
    friend SliceLaurentSeries operator*(const SliceLaurentSeries& f, const Quaternion& c);

    /// Semantic equality of the coefficient functions.
    friend bool operator==(const SliceLaurentSeries& a, const SliceLaurentSeries& b) {
        return a.lo_ == b.lo_ && a.c_ == b.c_;
    }

private:
    void grow_to(int n);
    void trim();

    int lo_ = 0;
    std::vector<Quaternion> c_;
};

/// The pair (a(t), b(t)) with f(e^{tJ}) = a(t) + J b(t) for every J.
struct SliceSample {
    Quaternion a;
    Quaternion b;
    double angle = 0.0;

    Quaternion at(const ImaginaryUnit& J) const { return a + J.quaternion() * b; }
};

/// a(t) = sum cos(nt) a_n, b(t) = sum sin(nt) a_n.
SliceSample slice_components(const SliceLaurentSeries& f, double t);

/// f(e^{tI}) = sum e^{ntI} a_n, coefficients multiplied on the right.
Quaternion evaluate(const SliceLaurentSeries& f, const BoundaryPoint& p);

/// Value at e^{tJ} of the slice extension of data given on the slice L_I.
/// `slice_values(s)` must return f(e^{sI}).
Quaternion extend_from_slice(const std::function<Quaternion(double)>& slice_values,
                             const ImaginaryUnit& I, const BoundaryPoint& target);

/// Coefficient convolution, (f * g)_n = sum_k a_k b_{n-k}.
SliceLaurentSeries star_mul(const SliceLaurentSeries& f, const SliceLaurentSeries& g);

/// Regular conjugate: conjugated coefficients.
SliceLaurentSeries conj_c(const SliceLaurentSeries& f);

/// f * f^c with the imaginary parts (rounding noise) dropped.
SliceLaurentSeries symmetrize(const SliceLaurentSeries& f);

inline constexpr double default_recip_tolerance = 1e-10;

/// Pointwise value of the star-reciprocal (f^s(p))^{-1} f^c(p).
/// Throws DomainError when |f^s(p)| <= tol.
Quaternion recip_star_at(const SliceLaurentSeries& f, const BoundaryPoint& p,
                         double tol = default_recip_tolerance);

/// Caches f^s and f^c for repeated pointwise evaluation of f^{-*}.
class StarReciprocal {
public:
    explicit StarReciprocal(const SliceLaurentSeries& f, double tol = default_recip_tolerance);

    Quaternion at(const BoundaryPoint& p) const;
    /// |f^s(p)|
    double symmetrization_modulus(const BoundaryPoint& p) const;
    double tolerance() const { return tol_; }

private:
    SliceLaurentSeries sym_;
    SliceLaurentSeries conj_;
    double tol_;
};

/// Pointwise star product: 0 if f(p) = 0, else f(p) g(f(p)^{-1} p f(p)).
Quaternion star_eval(const SliceLaurentSeries& f, const SliceLaurentSeries& g,
                     const BoundaryPoint& p);

SliceLaurentSeries project_plus(const SliceLaurentSeries& f);
SliceLaurentSeries project_minus(const SliceLaurentSeries& f);

/// <f, g> = sum conj(b_n) a_n.
Quaternion l2_inner(const SliceLaurentSeries& f, const SliceLaurentSeries& g);
double l2_norm(const SliceLaurentSeries& f);

/// sup over J in S of |a + J b|, in closed form.
double sphere_sup(const Quaternion& a, const Quaternion& b);

/// Minimum grid size accepted by linf_norm for f.
int linf_grid_guard(const SliceLaurentSeries& f);

inline constexpr int default_linf_grid = 4096;

/// Sampled essential supremum over the whole boundary: max over a uniform
/// grid of t of sphere_sup(a(t), b(t)), with a, b taken from the reference
/// slice I = i. Throws ParameterError when grid < linf_grid_guard(f).
double linf_norm(const SliceLaurentSeries& f, int grid = default_linf_grid,
                 Exec exec = Exec::parallel);

struct BmoOptions {
    int n_units = 64;   ///< sampled slices in addition to the reference slice
    int n_arcs = 9;     ///< dyadic depths m = 0 .. n_arcs-1, arc length 2*pi*2^-m
    int grid = default_linf_grid;
    unsigned long long seed = 1;
};

/// Sampled BMO seminorm: sup over slices and dyadic arcs (half-length
/// offsets, wrapping around) of the mean oscillation, trapezoid rule.
double bmo_norm(const SliceLaurentSeries& f, const BmoOptions& options = {},
                Exec exec = Exec::parallel);

}  // namespace qslice
