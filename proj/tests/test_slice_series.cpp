#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qslice/checks.hpp"
#include "qslice/errors.hpp"
#include "qslice/slice_series.hpp"

using namespace qslice;
using checks::random_quaternion;
using checks::random_series;

namespace {

const Quaternion I_{0, 1, 0, 0}, J_{0, 0, 1, 0}, K_{0, 0, 0, 1};

double qdist(const Quaternion& a, const Quaternion& b) { return (a - b).abs(); }

// direct term-by-term sum with cos/sin computed from scratch
Quaternion naive_eval(const SliceLaurentSeries& f, const ImaginaryUnit& u, double t) {
    Quaternion s;
    for (int n = f.n_min(); n <= f.n_max(); ++n) {
        const Quaternion e{std::cos(n * t), std::sin(n * t) * u.x(), std::sin(n * t) * u.y(),
                           std::sin(n * t) * u.z()};
        s += e * f.coeff(n);
    }
    return s;
}

}  // namespace

TEST(SliceLaurentSeries, SemanticEquality) {
    SliceLaurentSeries a{{0, 1.0}, {3, 0.0}};
    SliceLaurentSeries b = SliceLaurentSeries::monomial(0, 1.0);
    EXPECT_EQ(a, b);
    a.set(0, 0.0);
    EXPECT_TRUE(a.is_zero());
    EXPECT_THROW(a.set(1, Quaternion(NAN)), DomainError);
}

TEST(Evaluate, Examples) {
    const BoundaryPoint p(ImaginaryUnit::i(), std::numbers::pi / 2);
    EXPECT_LT(qdist(evaluate(SliceLaurentSeries::monomial(1, 1.0), p), I_), 1e-15);

    const SliceLaurentSeries f{{-1, 1.0}, {1, 1.0}};
    for (double t : {0.0, 0.4, 1.9, 3.0, 5.5})
        EXPECT_LT(qdist(evaluate(f, BoundaryPoint(ImaginaryUnit::i(), t)), Quaternion(2 * std::cos(t))),
                  1e-14);

    const Quaternion c{1, -2, 3, 0.5};
    EXPECT_EQ(evaluate(SliceLaurentSeries::monomial(0, c), BoundaryPoint(ImaginaryUnit::k(), 2.2)), c);
}

TEST(Evaluate, MatchesNaiveSum) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const auto f = random_series(rng, -5, 5);
        const auto u = sample_sphere(rng);
        const double ang = 0.37 * t;
        EXPECT_LT(qdist(evaluate(f, BoundaryPoint(u, ang)), naive_eval(f, u, ang)), 1e-11);
    }
}

TEST(SliceSample, ReconstructsEveryUnit) {
    std::mt19937_64 rng(12);
    const auto f = random_series(rng, -4, 4);
    for (int t = 0; t < 20; ++t) {
        const double ang = 0.31 * t;
        const auto s = slice_components(f, ang);
        const auto J = sample_sphere(rng);
        EXPECT_LT(qdist(s.at(J), evaluate(f, BoundaryPoint(J, ang))), 1e-12);
    }
}

TEST(ExtendFromSlice, Examples) {
    const auto q = SliceLaurentSeries::monomial(1, 1.0);
    const auto I = ImaginaryUnit::i();
    const auto on_i = [&](double s) { return evaluate(q, BoundaryPoint(I, s)); };
    const ImaginaryUnit J(1, 2, -2);
    const double t = 0.9;
    EXPECT_LT(qdist(extend_from_slice(on_i, I, BoundaryPoint(J, t)), exp_unit(t, J)), 1e-15);

    std::mt19937_64 rng(13);
    const auto f = random_series(rng, -5, 5);
    const auto on_f = [&](double s) { return evaluate(f, BoundaryPoint(I, s)); };
    EXPECT_EQ(extend_from_slice(on_f, I, BoundaryPoint(I, t)), on_f(t));

    for (int k = 0; k < 50; ++k) {
        const auto K = sample_sphere(rng);
        const auto U = sample_sphere(rng);
        const auto on_k = [&](double s) { return evaluate(f, BoundaryPoint(K, s)); };
        const BoundaryPoint target(U, 0.13 * k);
        EXPECT_LT(qdist(extend_from_slice(on_k, K, target), evaluate(f, target)), 1e-12);
    }
}

TEST(StarMul, Examples) {
    const auto qi = SliceLaurentSeries::monomial(1, I_);
    const auto qj = SliceLaurentSeries::monomial(1, J_);
    EXPECT_EQ(star_mul(qi, qj), SliceLaurentSeries::monomial(2, K_));
    EXPECT_EQ(star_mul(qj, qi), SliceLaurentSeries::monomial(2, -K_));
    std::mt19937_64 rng(14);
    const auto g = random_series(rng, -3, 6);
    EXPECT_EQ(star_mul(SliceLaurentSeries::monomial(0, 1.0), g), g);
}

TEST(StarMul, MatchesHandConvolution) {
    std::mt19937_64 rng(15);
    const auto f = random_series(rng, -2, 3), g = random_series(rng, -4, 1);
    const auto h = star_mul(f, g);
    EXPECT_GE(h.n_min(), f.n_min() + g.n_min());
    EXPECT_LE(h.n_max(), f.n_max() + g.n_max());
    for (int n = -6; n <= 4; ++n) {
        Quaternion s;
        for (int k = -2; k <= 3; ++k) s += f.coeff(k) * g.coeff(n - k);
        EXPECT_LT(qdist(h.coeff(n), s), 1e-12);
    }
}

TEST(ConjC, Examples) {
    EXPECT_EQ(conj_c(SliceLaurentSeries::monomial(1, I_)), SliceLaurentSeries::monomial(1, -I_));
    const SliceLaurentSeries real{{-2, 1.5}, {0, -3.0}, {4, 0.25}};
    EXPECT_EQ(conj_c(real), real);
    std::mt19937_64 rng(16);
    for (int t = 0; t < 20; ++t) {
        const auto f = random_series(rng, -8, 8), g = random_series(rng, -8, 8);
        EXPECT_EQ(conj_c(conj_c(f)), f);
        const auto lhs = conj_c(star_mul(f, g)), rhs = star_mul(conj_c(g), conj_c(f));
        for (int n = -16; n <= 16; ++n) {
            const auto d = lhs.coeff(n) - rhs.coeff(n);
            EXPECT_LE(std::max({std::abs(d.w), std::abs(d.x), std::abs(d.y), std::abs(d.z)}), 1e-12);
        }
    }
}

TEST(Symmetrize, Examples) {
    EXPECT_EQ(symmetrize(SliceLaurentSeries::monomial(1, I_)), SliceLaurentSeries::monomial(2, 1.0));
    const SliceLaurentSeries f{{0, 1.0}, {1, J_}};
    const SliceLaurentSeries expected{{0, 1.0}, {2, 1.0}};
    EXPECT_EQ(symmetrize(f), expected);
    EXPECT_EQ(star_mul(f, conj_c(f)), expected);
    EXPECT_TRUE(symmetrize(SliceLaurentSeries{}).is_zero());
}

TEST(Symmetrize, RealCoefficients) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        const auto f = random_series(rng, -8, 8);
        const auto raw = star_mul(f, conj_c(f));
        const double n2 = l2_norm(f) * l2_norm(f);
        for (const auto& c : raw.dense())
            EXPECT_LE(std::max({std::abs(c.x), std::abs(c.y), std::abs(c.z)}), 1e-12 * n2);
        for (const auto& c : symmetrize(f).dense()) EXPECT_EQ(c.x == 0 && c.y == 0 && c.z == 0, true);
        // f^c * f has the same (real) coefficients
        const auto other = star_mul(conj_c(f), f);
        for (int n = -16; n <= 16; ++n) EXPECT_NEAR(other.coeff(n).w, raw.coeff(n).w, 1e-10);
    }
}

TEST(RecipStar, Examples) {
    const Quaternion c{2, 0, -1, 1};
    const auto fc = SliceLaurentSeries::monomial(0, c);
    EXPECT_LT(qdist(recip_star_at(fc, BoundaryPoint(ImaginaryUnit::j(), 1.0)), inverse(c)), 1e-15);

    const auto q = SliceLaurentSeries::monomial(1, 1.0);
    for (double t : {0.2, 1.7, 4.0}) {
        const BoundaryPoint p(ImaginaryUnit::i(), t);
        EXPECT_LT(qdist(recip_star_at(q, p), exp_unit(-t, ImaginaryUnit::i())), 1e-15);
    }

    const SliceLaurentSeries qm1{{0, -1.0}, {1, 1.0}};
    try {
        recip_star_at(qm1, BoundaryPoint(ImaginaryUnit::i(), 0.0));
        FAIL() << "expected DomainError";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("symmetrization vanishes"), std::string::npos);
    }
}

TEST(RecipStar, StarInverseProperty) {
    std::mt19937_64 rng(18);
    int checked = 0;
    for (int t = 0; t < 30; ++t) {
        const auto f = random_series(rng, -3, 3);
        const StarReciprocal rf(f);
        for (int k = 0; k < 10; ++k) {
            const BoundaryPoint p(sample_sphere(rng), 0.61 * k + t);
            const Quaternion fp = evaluate(f, p);
            const auto moved = BoundaryPoint::from_quaternion(inverse(fp) * p.value() * fp, p.unit());
            if (rf.symmetrization_modulus(moved) <= 1e-6) continue;
            EXPECT_LT(qdist(fp * recip_star_at(f, moved), Quaternion::one()), 1e-8);
            EXPECT_LT(qdist(rf.at(moved), recip_star_at(f, moved)), 1e-12);
            ++checked;
        }
    }
    EXPECT_GT(checked, 250);
}

TEST(StarEval, Examples) {
    const auto fi = SliceLaurentSeries::monomial(0, I_);
    const auto gj = SliceLaurentSeries::monomial(1, J_);
    for (double t : {0.3, 2.0, 5.0}) {
        const BoundaryPoint p(ImaginaryUnit::i(), t);
        EXPECT_LT(qdist(star_eval(fi, gj, p), evaluate(SliceLaurentSeries::monomial(1, K_), p)), 1e-14);
        EXPECT_EQ(star_eval(SliceLaurentSeries{}, gj, p), Quaternion{});
    }
}

TEST(StarEval, MatchesConvolution) {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 10; ++t) {
        const auto f = random_series(rng, 0, 6), g = random_series(rng, 0, 6);
        const auto fg = star_mul(f, g);
        for (int k = 0; k < 100; ++k) {
            const BoundaryPoint p(sample_sphere(rng), std::uniform_real_distribution<double>(0, two_pi)(rng));
            const Quaternion ref = evaluate(fg, p);
            EXPECT_LE(qdist(star_eval(f, g, p), ref), 1e-9 * std::max(ref.abs(), 1e-3));
        }
    }
}

TEST(Projections, Examples) {
    const Quaternion a{1, 2, 0, 0}, b{0, 0, 3, 0}, c{0, 0, 0, 4};
    const SliceLaurentSeries f{{-1, a}, {0, b}, {1, c}};
    EXPECT_EQ(project_plus(f), (SliceLaurentSeries{{0, b}, {1, c}}));
    EXPECT_EQ(project_minus(f), SliceLaurentSeries::monomial(-1, a));
    std::mt19937_64 rng(20);
    for (int t = 0; t < 20; ++t) {
        const auto g = random_series(rng, -6, 6);
        EXPECT_EQ(project_plus(g) + project_minus(g), g);
        EXPECT_EQ(project_plus(project_plus(g)), project_plus(g));
        EXPECT_EQ(project_minus(conj_c(g)), conj_c(project_minus(g)));
        const double p = l2_norm(project_plus(g)), m = l2_norm(project_minus(g)), n = l2_norm(g);
        EXPECT_NEAR(n * n, p * p + m * m, 1e-12 * n * n);
    }
}

TEST(L2Inner, Examples) {
    for (int n = -3; n <= 3; ++n)
        for (int m = -3; m <= 3; ++m)
            EXPECT_EQ(l2_inner(SliceLaurentSeries::monomial(n, 1.0), SliceLaurentSeries::monomial(m, 1.0)),
                      Quaternion(n == m ? 1.0 : 0.0));
    EXPECT_EQ(l2_inner(SliceLaurentSeries::monomial(1, I_), SliceLaurentSeries::monomial(1, J_)), K_);
    EXPECT_EQ(l2_inner(SliceLaurentSeries{{0, 1.0}, {1, 1.0}}, SliceLaurentSeries{{0, 1.0}, {1, 1.0}}),
              Quaternion(2.0));
    std::mt19937_64 rng(21);
    const auto f = random_series(rng, -5, 5);
    const auto ff = l2_inner(f, f);
    EXPECT_NEAR(ff.w, l2_norm(f) * l2_norm(f), 1e-10);
    EXPECT_LE(std::hypot(ff.x, ff.y, ff.z), 1e-14 * ff.w);
    EXPECT_EQ(l2_norm(f), l2_norm(conj_c(f)));
}

TEST(SphereSup, Examples) {
    EXPECT_DOUBLE_EQ(sphere_sup(Quaternion(1, 2, 2, 4), Quaternion{}), 5.0);
    EXPECT_DOUBLE_EQ(sphere_sup(1.0, 1.0), std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(sphere_sup(1.0, I_), 2.0);
}

TEST(SphereSup, MatchesSampling) {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 100; ++t) {
        const auto a = random_quaternion(rng), b = random_quaternion(rng);
        const double closed = sphere_sup(a, b);
        const double sampled = checks::sampled_sphere_sup(a, b, rng);
        EXPECT_LE(sampled, closed * (1 + 1e-12));
        EXPECT_LE((closed - sampled) / closed, 1e-3);
    }
}

TEST(LinfNorm, Examples) {
    const Quaternion c{0.5, -1, 2, 0};
    EXPECT_NEAR(linf_norm(SliceLaurentSeries::monomial(3, c), 64), c.abs(), 1e-14);
    EXPECT_NEAR(linf_norm(SliceLaurentSeries{{-1, 1.0}, {1, 1.0}}, 64), 2.0, 1e-14);
    EXPECT_THROW(linf_norm(SliceLaurentSeries::monomial(10, 1.0), 55), ParameterError);
    EXPECT_NO_THROW(linf_norm(SliceLaurentSeries::monomial(10, 1.0), 56));
}

TEST(LinfNorm, DenseEvaluationOracle) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 5; ++t) {
        const auto f = random_series(rng, -3, 3);
        const double v = linf_norm(f, 4096);
        double brute = 0.0;
        for (int u = 0; u < 200; ++u) {
            const auto J = sample_sphere(rng);
            for (int m = 0; m < 512; ++m) brute = std::max(brute, naive_eval(f, J, two_pi * m / 512).abs());
        }
        EXPECT_LE(brute, v * (1 + 1e-12));
        EXPECT_LE((v - brute) / v, 1e-2);
        EXPECT_NEAR(linf_norm(conj_c(f), 4096), v, 1e-9 * v);
    }
}

TEST(BmoNorm, Examples) {
    BmoOptions o;
    o.n_units = 8;
    o.grid = 1024;
    EXPECT_EQ(bmo_norm(SliceLaurentSeries::monomial(0, Quaternion(1, 2, 3, 4)), o), 0.0);
    EXPECT_GE(bmo_norm(SliceLaurentSeries::monomial(1, 1.0), o), 1.0 - 1e-6);
    std::mt19937_64 rng(24);
    for (int t = 0; t < 10; ++t) {
        const auto f = random_series(rng, -4, 4, 1.0);
        EXPECT_LE(bmo_norm(f, o), 2.0 * linf_norm(f, o.grid) + 1e-9);
    }
}

TEST(BmoNorm, SerialMatchesParallel) {
    std::mt19937_64 rng(25);
    const auto f = random_series(rng, -4, 4, 1.0);
    BmoOptions o;
    o.n_units = 16;
    o.grid = 1024;
    EXPECT_EQ(bmo_norm(f, o, Exec::serial), bmo_norm(f, o, Exec::parallel));
}
