#pragma once

// Hankel norms of slice symbols and best L^inf approximation by bounded slice
// regular functions: the constructive route through a maximizing vector, and
// an independent derivative-free minimax search.

#include <string>
#include <vector>

#include "qslice/exec.hpp"
#include "qslice/hankel.hpp"
#include "qslice/slice_series.hpp"

namespace qslice {

/// Smallest truncation accepted by hankel_norm for phi: 2 * (length of the
/// negative support) + 8.
std::size_t min_truncation(const SliceLaurentSeries& phi);

/// ||H_phi|| through the n x n truncation. Throws ParameterError when
/// n < min_truncation(phi).
double hankel_norm(const SliceLaurentSeries& phi, std::size_t n, const NormOptions& options = {});

/// Unit g in H^2 (support [0, n-1]) with ||H_phi g|| = ||H_phi||, read off the
/// top singular vector of the embedded truncation. Throws DomainError when
/// H_phi = 0.
SliceLaurentSeries maximizing_vector(const SliceLaurentSeries& phi, std::size_t n,
                                     const NormOptions& options = {});

struct ConstructiveResult {
    /// Samples of f = phi - (H_phi g) * g^{-*} at e^{t_m i}, t_m = 2*pi*m/grid.
    std::vector<Quaternion> samples;
    /// Nonnegative Fourier coefficients of the samples up to index n-1.
    SliceLaurentSeries approximant;
    double distance = 0.0;
    double residual_negative_mass = 0.0;
    int excluded = 0;      ///< grid points where |g^s| <= 1e-10
    bool warning = false;  ///< more than 1% of the grid excluded
};

/// Builds f from a given maximizing vector g. The star product
/// (H_phi g) * g^{-*} is evaluated pointwise as h(p) g^{-*}(h(p)^{-1} p h(p)).
ConstructiveResult constructive_from_maximizer(const SliceLaurentSeries& phi,
                                               const SliceLaurentSeries& g, std::size_t n,
                                               int grid, Exec exec = Exec::parallel);

ConstructiveResult constructive_best_approx(const SliceLaurentSeries& phi, std::size_t n, int grid,
                                            const NormOptions& options = {});

struct OptimizeOptions {
    int degree = 4;
    int grid = 8192;
    long budget = 20000;  ///< objective evaluations, shared by all starts
    unsigned long long seed = 42;
    int starts = 8;
    Exec exec = Exec::parallel;
};

struct OptimizeResult {
    SliceLaurentSeries f;
    double distance = 0.0;       ///< linf_norm(phi - f, grid)
    double min_evaluated = 0.0;  ///< smallest objective value of any evaluated candidate
    long evaluations = 0;
    bool budget_exhausted = false;
    /// Best-so-far objective per start, one entry per sweep.
    std::vector<std::vector<double>> traces;
};

/// Multi-start coordinate pattern search for min ||phi - f||_inf over
/// polynomials f of the given degree. Deterministic for a fixed seed.
OptimizeResult optimize_distance(const SliceLaurentSeries& phi, const OptimizeOptions& options = {});

struct ApproximationReport {
    double hankel_norm = 0.0;
    double constructive_distance = 0.0;
    double optimized_distance = 0.0;
    SliceLaurentSeries best_approx;
    double residual_negative_mass = 0.0;
    int truncation_N = 0;
    int grid = 0;
};

struct ApproximationRun {
    ApproximationReport report;
    ConstructiveResult constructive;
    OptimizeResult optimized;
};

/// Runs both routes for phi. options.grid is used for both.
ApproximationRun approximate(const SliceLaurentSeries& phi, std::size_t n,
                             const OptimizeOptions& options = {});

/// Problems with the invariant ladder of a report (empty when consistent):
/// hankel_norm must not exceed either distance by more than tol * scale.
std::vector<std::string> report_violations(const ApproximationReport& report, double tol = 1e-6);

struct NehariBoundsReport {
    double gamma_norm = 0.0;
    double constructive_distance = 0.0;
    double optimized_distance = 0.0;
    double distance = 0.0;  ///< min of the two routes
    double ratio = 0.0;     ///< gamma_norm / distance (0 when distance is 0)
    bool lower_bound_holds = false;
    bool upper_bound_holds = false;
    bool equality_holds = false;
    std::vector<std::string> failures;
};

inline constexpr double nehari_tolerance = 2e-2;

/// d (1 - tol) <= ||Gamma_alpha|| <= 2 d (1 + tol) with d the distance of the
/// associated symbol sum_m q^{-1-m} alpha_m from H^inf. Failures are reported,
/// never thrown.
NehariBoundsReport verify_nehari_bounds(std::span<const Quaternion> alpha, std::size_t n,
                                        const OptimizeOptions& options,
                                        double tol = nehari_tolerance);

/// The symbol sum_m q^{-1-m} alpha_m whose Hankel matrix is alpha(j+k).
SliceLaurentSeries symbol_from_sequence(std::span<const Quaternion> alpha);

}  // namespace qslice
