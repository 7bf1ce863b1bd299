#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qslice/checks.hpp"
#include "qslice/errors.hpp"
#include "qslice/nehari.hpp"

using namespace qslice;
using checks::random_quaternion;
using checks::random_symbol;

namespace {

const Quaternion J_{0, 0, 1, 0};

OptimizeOptions small_options() {
    OptimizeOptions o;
    o.grid = 2048;
    o.budget = 4000;
    return o;
}

}  // namespace

TEST(HankelNorm, Examples) {
    const Quaternion c{0.3, -1.2, 0.7, 2.0};
    EXPECT_NEAR(hankel_norm(SliceLaurentSeries::monomial(-1, c), 16), c.abs(), 1e-12);
    EXPECT_EQ(hankel_norm(SliceLaurentSeries{{0, 1.0}, {2, J_}}, 16), 0.0);
    const SliceLaurentSeries golden{{-1, 1.0}, {-2, 1.0}};
    EXPECT_NEAR(hankel_norm(golden, 16), (1.0 + std::sqrt(5.0)) / 2.0, 1e-12);
}

TEST(HankelNorm, TruncationGuardAndStability) {
    const SliceLaurentSeries phi{{-3, 1.0}, {-1, J_}};
    EXPECT_EQ(min_truncation(phi), 14u);
    EXPECT_THROW(hankel_norm(phi, 13), ParameterError);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 10; ++t) {
        const auto s = random_symbol(rng, 6, 3);
        EXPECT_NEAR(hankel_norm(s, 32), hankel_norm(s, 64), 1e-12 * hankel_norm(s, 32));
    }
}

TEST(MaximizingVector, RankOne) {
    const auto phi = SliceLaurentSeries::monomial(-1, 1.0);
    const auto g = maximizing_vector(phi, 16);
    EXPECT_EQ(g.n_min(), 0);
    EXPECT_EQ(g.n_max(), 0);
    EXPECT_NEAR(g.coeff(0).abs(), 1.0, 1e-12);
    EXPECT_NEAR(l2_norm(apply_H(phi, g)), 1.0, 1e-12);
    EXPECT_THROW(maximizing_vector(SliceLaurentSeries::monomial(1, 1.0), 16), DomainError);
}

TEST(MaximizingVector, RandomSymbolsAndGauge) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 10; ++t) {
        const auto phi = random_symbol(rng);
        const double hn = hankel_norm(phi, 64);
        const auto g = maximizing_vector(phi, 64);
        EXPECT_NEAR(l2_norm(g), 1.0, 1e-10);
        EXPECT_GE(l2_norm(apply_H(phi, g)), hn * (1 - 1e-8));
        EXPECT_LE(g.n_min(), g.n_max());
        EXPECT_GE(g.n_min(), 0);
        const auto u = sample_unit_quaternion(rng);
        EXPECT_NEAR(l2_norm(apply_H(phi, g * u)), l2_norm(apply_H(phi, g)), 1e-12 * hn);
    }
}

TEST(Constructive, RankOne) {
    const Quaternion c{0.0, 0.6, 0.0, -0.8};
    const auto r = constructive_best_approx(SliceLaurentSeries::monomial(-1, c), 16, 4096);
    EXPECT_NEAR(r.distance, c.abs(), 1e-6);
    EXPECT_TRUE(r.approximant.is_zero());
    EXPECT_LE(r.residual_negative_mass, 1e-12);
    EXPECT_EQ(r.excluded, 0);
    EXPECT_FALSE(r.warning);
}

TEST(Constructive, AnalyticPartRecovered) {
    const SliceLaurentSeries phi{{-1, 1.0}, {1, 3.0}};
    const int grid = 4096;
    const auto r = constructive_best_approx(phi, 16, grid);
    EXPECT_NEAR(r.distance, 1.0, 1e-6);
    for (int m = 0; m < grid; m += 97) {
        const auto want = evaluate(SliceLaurentSeries::monomial(1, 3.0), BoundaryPoint(ImaginaryUnit::i(), two_pi * m / grid));
        EXPECT_LT((r.samples[m] - want).abs(), 1e-9);
    }
    EXPECT_NEAR(r.approximant.coeff(1).w, 3.0, 1e-9);
}

TEST(Constructive, RandomSymbolsMatchNormAndAreGaugeInvariant) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 5; ++t) {
        const auto phi = random_symbol(rng);
        const double hn = hankel_norm(phi, 64);
        const auto g = maximizing_vector(phi, 64);
        const auto base = constructive_from_maximizer(phi, g, 64, 8192);
        EXPECT_LE(std::abs(base.distance - hn), 1e-2 * hn);
        EXPECT_LE(base.residual_negative_mass, 1e-3 * linf_norm(phi, 8192));
        for (int k = 0; k < 3; ++k) {
            const auto u = sample_unit_quaternion(rng);
            const auto gauged = constructive_from_maximizer(phi, g * u, 64, 8192);
            EXPECT_NEAR(gauged.distance, base.distance, 1e-10);
        }
    }
}

TEST(Constructive, SerialMatchesParallel) {
    std::mt19937_64 rng(4);
    const auto phi = random_symbol(rng);
    const auto g = maximizing_vector(phi, 32);
    const auto s = constructive_from_maximizer(phi, g, 32, 2048, Exec::serial);
    const auto p = constructive_from_maximizer(phi, g, 32, 2048, Exec::parallel);
    EXPECT_EQ(s.distance, p.distance);
    EXPECT_EQ(s.samples, p.samples);
}

TEST(Optimize, AnalyticSymbolIsInterpolated) {
    const SliceLaurentSeries phi{{0, Quaternion(1, 2, 0, 0)}, {3, J_}};
    const auto r = optimize_distance(phi, small_options());
    EXPECT_LE(r.distance, 1e-6);
}

TEST(Optimize, RankOneKeepsZero) {
    const auto r = optimize_distance(SliceLaurentSeries::monomial(-1, 1.0), small_options());
    EXPECT_NEAR(r.distance, 1.0, 1e-9);
    EXPECT_GE(r.min_evaluated, 1.0 - 1e-6);
}

TEST(Optimize, LowerBoundMonotoneAndDeterministic) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 3; ++t) {
        const auto phi = random_symbol(rng);
        const double hn = hankel_norm(phi, 64);
        auto o = small_options();
        o.seed = 100 + t;
        const auto r = optimize_distance(phi, o);
        EXPECT_GE(r.min_evaluated, hn - 1e-6 * std::max(1.0, hn));
        EXPECT_GE(r.distance, hn - 1e-6 * std::max(1.0, hn));
        EXPECT_LE(r.evaluations, o.budget + static_cast<long>(o.starts));
        ASSERT_EQ(r.traces.size(), static_cast<std::size_t>(o.starts));
        for (const auto& tr : r.traces)
            for (std::size_t k = 1; k < tr.size(); ++k) EXPECT_LE(tr[k], tr[k - 1]);
        const auto again = optimize_distance(phi, o);
        EXPECT_EQ(again.distance, r.distance);
        EXPECT_EQ(again.f, r.f);
        o.exec = Exec::serial;
        EXPECT_EQ(optimize_distance(phi, o).distance, r.distance);
    }
}

TEST(Approximate, ReportLadder) {
    std::mt19937_64 rng(6);
    const auto phi = random_symbol(rng);
    const auto run = approximate(phi, 64, small_options());
    EXPECT_TRUE(report_violations(run.report).empty());
    EXPECT_EQ(run.report.truncation_N, 64);
    EXPECT_EQ(run.report.grid, 2048);
    EXPECT_EQ(run.report.best_approx, run.constructive.approximant);

    auto broken = run.report;
    broken.optimized_distance = broken.hankel_norm * 0.5;
    EXPECT_FALSE(report_violations(broken).empty());
}

TEST(NehariBounds, Delta) {
    const QuaternionSequence delta0{1.0};
    const auto r = verify_nehari_bounds(delta0, 16, small_options());
    EXPECT_NEAR(r.gamma_norm, 1.0, 1e-12);
    EXPECT_NEAR(r.distance, 1.0, 1e-6);
    EXPECT_TRUE(r.lower_bound_holds);
    EXPECT_TRUE(r.upper_bound_holds);
    EXPECT_TRUE(r.equality_holds);
    EXPECT_TRUE(r.failures.empty());
}

TEST(NehariBounds, RandomShortSequences) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 3; ++t) {
        QuaternionSequence alpha(1 + t % 5);
        for (auto& q : alpha) q = random_quaternion(rng);
        const auto r = verify_nehari_bounds(alpha, 64, small_options());
        EXPECT_TRUE(r.lower_bound_holds && r.upper_bound_holds) << r.gamma_norm << " " << r.distance;
        EXPECT_GE(r.ratio, 1.0 - nehari_tolerance);
        EXPECT_LE(r.ratio, 2.0 * (1.0 + nehari_tolerance));
    }
}

TEST(NehariBounds, SymbolFromSequence) {
    const QuaternionSequence alpha{1.0, J_, 3.0};
    const auto phi = symbol_from_sequence(alpha);
    EXPECT_EQ(phi.coeff(-1), Quaternion(1.0));
    EXPECT_EQ(phi.coeff(-2), J_);
    EXPECT_EQ(phi.coeff(-3), Quaternion(3.0));
    EXPECT_EQ(hankel_from_symbol(phi, 5).matrix(), build_hankel_matrix(alpha, 5));
}
