#include "qslice/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qslice/errors.hpp"
#include "qslice/slice_series.hpp"

namespace qslice::kernels {

UnitCircleTable::UnitCircleTable(int grid_) : grid(grid_), cos(grid_), sin(grid_) {
    for (int k = 0; k < grid; ++k) {
        const double t = two_pi * static_cast<double>(k) / static_cast<double>(grid);
        cos[k] = std::cos(t);
        sin[k] = std::sin(t);
    }
}

int UnitCircleTable::index(long long n, long long m) const {
    long long r = (n % grid) * (m % grid) % grid;
    if (r < 0) r += grid;
    return static_cast<int>(r);
}

namespace {

Quaternion sample_at(const SliceLaurentSeries& f, const UnitCircleTable& table, int m) {
    const auto coeffs = f.dense();
    Quaternion acc;
    long long n = f.n_min();
    for (const auto& c : coeffs) {
        const int k = table.index(n, m);
        acc += mul_complex_i(table.cos[k], table.sin[k], c);
        ++n;
    }
    return acc;
}

}  // namespace

std::vector<Quaternion> sample_reference_slice(const SliceLaurentSeries& f, int grid, Exec exec) {
    const UnitCircleTable table(grid);
    std::vector<Quaternion> out(grid);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (int m = 0; m < grid; ++m) out[m] = sample_at(f, table, m);
    } else {
        for (int m = 0; m < grid; ++m) out[m] = sample_at(f, table, m);
    }
    return out;
}

void slice_pair(std::span<const Quaternion> samples, std::size_t m, Quaternion& a, Quaternion& b) {
    const std::size_t g = samples.size();
    const Quaternion& plus = samples[m];
    const Quaternion& minus = samples[(g - m) % g];
    a = (plus + minus) * 0.5;
    b = mul_i(minus - plus) * 0.5;
}

double slice_sup_max(std::span<const Quaternion> samples, Exec exec) {
    // t and -t give the same sphere, so half the circle suffices
    const long half = static_cast<long>(samples.size() / 2);
    double best = 0.0;
    if (exec == Exec::parallel) {
#pragma omp parallel for reduction(max : best) schedule(static)
        for (long m = 0; m <= half; ++m) {
            Quaternion a, b;
            slice_pair(samples, static_cast<std::size_t>(m), a, b);
            best = std::max(best, sphere_sup(a, b));
        }
    } else {
        for (long m = 0; m <= half; ++m) {
            Quaternion a, b;
            slice_pair(samples, static_cast<std::size_t>(m), a, b);
            best = std::max(best, sphere_sup(a, b));
        }
    }
    return best;
}

namespace {

double slice_bmo(std::span<const Quaternion> avals, std::span<const Quaternion> bvals,
                 const ImaginaryUnit& J, int n_arcs, std::vector<Quaternion>& v) {
    const std::size_t g = avals.size();
    const Quaternion Jq = J.quaternion();
    for (std::size_t m = 0; m < g; ++m) v[m] = avals[m] + Jq * bvals[m];

    double best = 0.0;
    for (int depth = 0; depth < n_arcs; ++depth) {
        const std::size_t len = g >> depth;  // arc length in grid steps
        if (len < 2) break;
        const std::size_t step = std::max<std::size_t>(1, len / 2);
        const double inv_len = 1.0 / static_cast<double>(len);
        for (std::size_t start = 0; start < g; start += step) {
            // trapezoid rule over the len+1 grid points of the arc, centred on
            // the first sample so that constant arcs give exactly zero
            const Quaternion v0 = v[start % g];
            auto d = [&](std::size_t r) { return v[(start + r) % g] - v0; };
            Quaternion mean = d(len) * 0.5;
            for (std::size_t r = 1; r < len; ++r) mean += d(r);
            mean *= inv_len;
            double osc = 0.5 * (mean.abs() + (d(len) - mean).abs());
            for (std::size_t r = 1; r < len; ++r) osc += (d(r) - mean).abs();
            best = std::max(best, osc * inv_len);
        }
    }
    return best;
}

}  // namespace

double bmo_sup(std::span<const Quaternion> samples, std::span<const ImaginaryUnit> units,
               int n_arcs, Exec exec) {
    const std::size_t g = samples.size();
    std::vector<Quaternion> avals(g), bvals(g);
    for (std::size_t m = 0; m < g; ++m) slice_pair(samples, m, avals[m], bvals[m]);

    const long n_units = static_cast<long>(units.size());
    double best = 0.0;
    if (exec == Exec::parallel) {
#pragma omp parallel reduction(max : best)
        {
            std::vector<Quaternion> scratch(g);
#pragma omp for schedule(dynamic)
            for (long u = 0; u < n_units; ++u)
                best = std::max(best, slice_bmo(avals, bvals, units[u], n_arcs, scratch));
        }
    } else {
        std::vector<Quaternion> scratch(g);
        for (long u = 0; u < n_units; ++u)
            best = std::max(best, slice_bmo(avals, bvals, units[u], n_arcs, scratch));
    }
    return best;
}

namespace {

constexpr double jacobi_tol = 1e-15;

// Orthogonalizes columns p and q of a, accumulating the rotation into v.
// Columns with squared norm below `floor` count as zero (rank-deficient input).
bool rotate_pair(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q, double floor) {
    auto ap = a.col(p);
    auto aq = a.col(q);
    double alpha = 0.0, beta = 0.0;
    Complex gamma{};
    for (std::size_t r = 0; r < ap.size(); ++r) {
        alpha += std::norm(ap[r]);
        beta += std::norm(aq[r]);
        gamma += std::conj(ap[r]) * aq[r];
    }
    const double g = std::abs(gamma);
    if (g == 0.0 || alpha <= floor || beta <= floor || g <= jacobi_tol * std::sqrt(alpha * beta))
        return false;

    const Complex phase = std::conj(gamma / g);
    const double zeta = (beta - alpha) / (2.0 * g);
    const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = c * t;

    auto apply = [&](std::span<Complex> x, std::span<Complex> y) {
        for (std::size_t r = 0; r < x.size(); ++r) {
            const Complex xr = x[r];
            const Complex yr = y[r] * phase;
            x[r] = c * xr - s * yr;
            y[r] = s * xr + c * yr;
        }
    };
    apply(ap, aq);
    apply(v.col(p), v.col(q));
    return true;
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> round_robin(std::size_t n) {
    const std::size_t players = n + (n % 2);
    std::vector<std::size_t> ring(players);
    std::iota(ring.begin(), ring.end(), 0);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rounds;
    for (std::size_t r = 0; r + 1 < players; ++r) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < players / 2; ++i) {
            std::size_t p = ring[i], q = ring[players - 1 - i];
            if (p >= n || q >= n) continue;  // bye
            if (p > q) std::swap(p, q);
            pairs.emplace_back(p, q);
        }
        rounds.push_back(std::move(pairs));
        std::rotate(ring.begin() + 1, ring.end() - 1, ring.end());
    }
    return rounds;
}

}  // namespace

SvdResult jacobi_svd(ComplexMatrix a, Exec exec, int max_sweeps) {
    const std::size_t n = a.cols();
    SvdResult out;
    out.v = ComplexMatrix::identity(n);

    const auto rounds = exec == Exec::parallel ? round_robin(n)
                                               : decltype(round_robin(n)){};
    double frob2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) frob2 += std::pow(norm2(a.col(j)), 2);
    const double floor = jacobi_tol * jacobi_tol * frob2;
    bool converged = n < 2;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        long rotations = 0;
        if (exec == Exec::parallel) {
            for (const auto& pairs : rounds) {
                const long np = static_cast<long>(pairs.size());
#pragma omp parallel for reduction(+ : rotations) schedule(static)
                for (long i = 0; i < np; ++i)
                    rotations += rotate_pair(a, out.v, pairs[i].first, pairs[i].second, floor) ? 1 : 0;
            }
        } else {
            for (std::size_t p = 0; p + 1 < n; ++p)
                for (std::size_t q = p + 1; q < n; ++q)
                    rotations += rotate_pair(a, out.v, p, q, floor) ? 1 : 0;
        }
        out.sweeps = sweep + 1;
        converged = rotations == 0;
    }
    if (!converged)
        throw NumericError("jacobi_svd: no convergence after " + std::to_string(max_sweeps) +
                           " sweeps");

    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j) norms[j] = norm2(a.col(j));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    ComplexMatrix v_sorted(n, n);
    out.sigma.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.sigma[j] = norms[order[j]];
        const auto src = out.v.col(order[j]);
        std::copy(src.begin(), src.end(), v_sorted.col(j).begin());
    }
    out.v = std::move(v_sorted);
    return out;
}

}  // namespace qslice::kernels
