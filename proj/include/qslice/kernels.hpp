#pragma once

// Data-parallel inner loops. Every kernel has an OpenMP path and a serial
// reference path selected by Exec; the two must agree (max reductions
// exactly, sums and SVD to rounding).

#include <span>
#include <vector>

#include "qslice/complex_matrix.hpp"
#include "qslice/exec.hpp"
#include "qslice/quaternion.hpp"

namespace qslice {
class SliceLaurentSeries;
}

namespace qslice::kernels {

/// cos/sin of 2*pi*k/grid for k = 0 .. grid-1.
struct UnitCircleTable {
    explicit UnitCircleTable(int grid);
    int grid;
    std::vector<double> cos;
    std::vector<double> sin;
    /// Index of n*m mod grid.
    int index(long long n, long long m) const;
};

/// (c + s i) q, left multiplication by a complex number of the slice L_i.
constexpr Quaternion mul_complex_i(double c, double s, const Quaternion& q) {
    return {c * q.w - s * q.x, c * q.x + s * q.w, c * q.y - s * q.z, c * q.z + s * q.y};
}

/// i q
constexpr Quaternion mul_i(const Quaternion& q) { return {-q.x, q.w, -q.z, q.y}; }

/// f(e^{t_m i}) for t_m = 2*pi*m/grid, m = 0 .. grid-1.
std::vector<Quaternion> sample_reference_slice(const SliceLaurentSeries& f, int grid, Exec exec);

/// (a(t_m), b(t_m)) recovered from reference-slice samples by the
/// representation formula: a = (F(t)+F(-t))/2, b = (i/2)(F(-t)-F(t)).
void slice_pair(std::span<const Quaternion> samples, std::size_t m, Quaternion& a, Quaternion& b);

/// max over grid angles of sup_J |a(t) + J b(t)|.
double slice_sup_max(std::span<const Quaternion> samples, Exec exec);

/// Sampled BMO supremum over the given slices and dyadic arcs.
double bmo_sup(std::span<const Quaternion> samples, std::span<const ImaginaryUnit> units,
               int n_arcs, Exec exec);

struct SvdResult {
    std::vector<double> sigma;  ///< singular values, descending
    ComplexMatrix v;            ///< right singular vectors, column j <-> sigma[j]
    int sweeps = 0;
};

/// One-sided (Hestenes) Jacobi SVD. The serial path uses the cyclic row
/// ordering; the parallel path uses a round-robin ordering whose n/2 column
/// pairs per round are independent. Throws NumericError after max_sweeps.
SvdResult jacobi_svd(ComplexMatrix a, Exec exec, int max_sweeps = 60);

}  // namespace qslice::kernels
