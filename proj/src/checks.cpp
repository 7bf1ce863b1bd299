#include "qslice/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qslice/hankel.hpp"
#include "qslice/kernels.hpp"
#include "qslice/nehari.hpp"

namespace qslice::checks {

Quaternion random_quaternion(std::mt19937_64& rng, double sigma) {
    std::normal_distribution<double> gauss(0.0, sigma);
    return {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
}

SliceLaurentSeries random_series(std::mt19937_64& rng, int lo, int hi, double max_modulus) {
    std::uniform_real_distribution<double> modulus(0.0, max_modulus);
    std::vector<Quaternion> c(static_cast<std::size_t>(hi - lo + 1));
    for (auto& q : c) q = sample_unit_quaternion(rng) * modulus(rng);
    return SliceLaurentSeries::from_dense(lo, std::move(c));
}

SliceLaurentSeries random_symbol(std::mt19937_64& rng, int max_negative, int max_positive) {
    std::uniform_int_distribution<int> neg(1, max_negative);
    std::uniform_int_distribution<int> pos(-1, max_positive);
    const int k = neg(rng);
    const int d = pos(rng);
    SliceLaurentSeries phi;
    for (int n = -k; n <= d; ++n) phi.set(n, random_quaternion(rng));
    return phi;
}

double sampled_sphere_sup(const Quaternion& a, const Quaternion& b, std::mt19937_64& rng, int samples) {
    double best = 0.0;
    for (int s = 0; s < samples; ++s) {
        const Quaternion J = sample_sphere(rng).quaternion();
        best = std::max(best, (a + J * b).abs());
    }
    return best;
}

namespace {

class Recorder {
public:
    Recorder(std::vector<CheckRow>& rows, unsigned long long seed, bool corrupt)
        : rows_(rows), seed_(seed), corrupt_(corrupt) {}

    void operator()(const std::string& suite, const std::string& check, double value, double bound) {
        if (corrupt_) bound = -std::numeric_limits<double>::infinity();
        rows_.push_back({suite, check, seed_, value, bound, value <= bound});
    }

private:
    std::vector<CheckRow>& rows_;
    unsigned long long seed_;
    bool corrupt_;
};

double max_component_diff(const SliceLaurentSeries& f, const SliceLaurentSeries& g) {
    const int lo = std::min(f.n_min(), g.n_min());
    const int hi = std::max(f.n_max(), g.n_max());
    double worst = 0.0;
    for (int n = lo; n <= hi; ++n) {
        const Quaternion d = f.coeff(n) - g.coeff(n);
        worst = std::max({worst, std::abs(d.w), std::abs(d.x), std::abs(d.y), std::abs(d.z)});
    }
    return worst;
}

double l1_norm(const SliceLaurentSeries& f) {
    double s = 0.0;
    for (const auto& c : f.dense()) s += c.abs();
    return s;
}

BoundaryPoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, two_pi);
    const auto J = sample_sphere(rng);
    return {J, angle(rng)};
}

void algebra_suite(Recorder& rec, std::mt19937_64& rng) {
    const auto f = random_series(rng, -8, 8);
    const auto g = random_series(rng, -8, 8);
    rec("algebra", "conj_antihomomorphism",
        max_component_diff(conj_c(star_mul(f, g)), star_mul(conj_c(g), conj_c(f))), 1e-12);

    const auto fg = star_mul(f, g);
    const double floor = 1e-6 * l1_norm(f) * l1_norm(g);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
        const auto p = random_point(rng);
        const Quaternion ref = evaluate(fg, p);
        worst = std::max(worst, (star_eval(f, g, p) - ref).abs() / std::max(ref.abs(), floor));
    }
    rec("algebra", "pointwise_star_product", worst, 1e-9);

    const auto raw = star_mul(f, conj_c(f));
    double imag = 0.0;
    for (const auto& c : raw.dense()) imag = std::max({imag, std::abs(c.x), std::abs(c.y), std::abs(c.z)});
    const double n2 = l2_norm(f) * l2_norm(f);
    rec("algebra", "symmetrization_real", imag / n2, 1e-12);
}

void norm_suite(Recorder& rec, std::mt19937_64& rng, int grid) {
    const auto f = random_series(rng, -8, 8);
    rec("norms", "l2_conjugation", std::abs(l2_norm(f) - l2_norm(conj_c(f))), 0.0);

    const double linf = linf_norm(f, grid);
    rec("norms", "linf_conjugation", std::abs(linf - linf_norm(conj_c(f), grid)) / linf, 1e-9);

    const double p = l2_norm(project_plus(f)), m = l2_norm(project_minus(f)), t = l2_norm(f);
    rec("norms", "pythagoras", std::abs(t * t - (p * p + m * m)) / (t * t), 1e-14);

    const Quaternion a = random_quaternion(rng), b = random_quaternion(rng);
    const double closed = sphere_sup(a, b);
    const double sampled = sampled_sphere_sup(a, b, rng);
    rec("norms", "sphere_sup_vs_sampling", std::abs(closed - sampled) / closed, 1e-3);
    rec("norms", "sphere_sup_dominates", sampled - closed, 1e-12 * closed);

    // recompute from a random slice through the representation formula
    const auto J = sample_sphere(rng);
    const auto on_slice = [&](double s) { return evaluate(f, BoundaryPoint(J, s)); };
    std::vector<Quaternion> samples(static_cast<std::size_t>(grid));
    for (int k = 0; k < grid; ++k)
        samples[k] = extend_from_slice(on_slice, J, BoundaryPoint(ImaginaryUnit::i(), two_pi * k / grid));
    rec("norms", "slice_independence",
        std::abs(kernels::slice_sup_max(samples, Exec::parallel) - linf) / linf, 1e-9);
}

void hankel_suite(Recorder& rec, std::mt19937_64& rng, int grid) {
    const std::size_t n = 32;
    QuaternionSequence alpha(2 * n - 1);
    for (auto& q : alpha) q = random_quaternion(rng);
    const auto m = build_hankel_matrix(alpha, n);
    rec("hankel", "commutation_hankel", commutation_residual(m), 1e-14);

    auto broken = m;
    const Quaternion delta = random_quaternion(rng);
    broken(3, 5) += delta;
    rec("hankel", "commutation_perturbed", delta.abs() / 2.0 - commutation_residual(broken), 0.0);

    QuaternionMatrix a(3, 3), b(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            a(r, c) = random_quaternion(rng);
            b(r, c) = random_quaternion(rng);
        }
    const auto lhs = complex_embed(a * b);
    const auto rhs = complex_embed(a) * complex_embed(b);
    double worst = 0.0;
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) worst = std::max(worst, std::abs(lhs(r, c) - rhs(r, c)));
    rec("hankel", "embedding_multiplicative", worst, 1e-12);

    const auto psi = random_series(rng, -6, 6, 1.0);
    const auto f = random_series(rng, 0, 6, 1.0);
    const double bound = linf_norm(psi, grid) * l2_norm(f);
    rec("hankel", "norm_bound_chain", l2_norm(apply_H(psi, f)) / bound - 1.0, 1e-6);
}

void bmo_suite(Recorder& rec, std::mt19937_64& rng) {
    const auto f = random_series(rng, -4, 4, 1.0);
    BmoOptions options;
    rec("bmo", "bmo_le_2_linf", bmo_norm(f, options) - 2.0 * linf_norm(f, options.grid), 1e-9);
    rec("bmo", "constant_zero", bmo_norm(SliceLaurentSeries::monomial(0, random_quaternion(rng)), options),
        0.0);
}

void nehari_suite(Recorder& rec, std::mt19937_64& rng, const VerifyConfig& cfg, unsigned long long seed) {
    const auto phi = random_symbol(rng);
    OptimizeOptions options;
    options.degree = cfg.degree;
    options.grid = cfg.grid;
    options.budget = cfg.budget;
    options.seed = seed;
    const auto n = std::max<std::size_t>(static_cast<std::size_t>(cfg.truncation_N), min_truncation(phi));
    const auto run = approximate(phi, n, options);
    const auto& r = run.report;
    const double hn = r.hankel_norm;
    rec("nehari", "lower_bound_every_iterate", hn - run.optimized.min_evaluated, 1e-6 * std::max(1.0, hn));
    rec("nehari", "constructive_equals_norm", std::abs(r.constructive_distance - hn) / hn, 2e-2);
    const double d = std::min(r.constructive_distance, r.optimized_distance);
    rec("nehari", "sandwich_lower", d * (1.0 - nehari_tolerance) - hn, 0.0);
    rec("nehari", "sandwich_upper", hn - 2.0 * d * (1.0 + nehari_tolerance), 0.0);
    rec("nehari", "residual_negative_mass", r.residual_negative_mass / linf_norm(phi, cfg.grid), 1e-3);
}

void calibration_suite(Recorder& rec) {
    const std::vector<Quaternion> hilbert{1.0, 0.5, 1.0 / 3.0};
    const double expected = (4.0 + std::sqrt(13.0)) / 6.0;
    rec("calibration", "hilbert_2x2", std::abs(operator_norm(build_hankel_matrix(hilbert, 2)) - expected),
        1e-10);
    const Quaternion c{0.3, -1.2, 0.7, 2.0};
    const auto phi = SliceLaurentSeries::monomial(-1, c);
    rec("calibration", "rank_one_norm", std::abs(hankel_norm(phi, 16) - c.abs()), 1e-12);
    rec("calibration", "rank_one_constructive",
        std::abs(constructive_best_approx(phi, 16, 4096).distance - c.abs()), 1e-6);
}

}  // namespace

std::vector<CheckRow> run_verify(const VerifyConfig& config) {
    const int trials = std::max(0, config.trials);
    const int grid = std::max(config.grid, 64);
    std::vector<std::vector<CheckRow>> per_trial(static_cast<std::size_t>(trials));

#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        const unsigned long long seed = config.seed + static_cast<unsigned long long>(t);
        std::mt19937_64 rng(seed);
        Recorder rec(per_trial[t], seed, config.corrupt_tolerance);
        if (t == 0) calibration_suite(rec);
        algebra_suite(rec, rng);
        norm_suite(rec, rng, grid);
        hankel_suite(rec, rng, grid);
        bmo_suite(rec, rng);
        nehari_suite(rec, rng, config, seed);
    }

    std::vector<CheckRow> rows;
    for (auto& v : per_trial) rows.insert(rows.end(), v.begin(), v.end());
    return rows;
}

}  // namespace qslice::checks
