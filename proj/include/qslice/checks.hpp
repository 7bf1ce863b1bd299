#pragma once

// Randomized property suites driven by `qslice verify`. Each check yields one
// row: measured value against a bound, passing when value <= bound.

#include <random>
#include <string>
#include <vector>

#include "qslice/quaternion.hpp"
#include "qslice/slice_series.hpp"

namespace qslice::checks {

struct CheckRow {
    std::string suite;
    std::string check;
    unsigned long long seed = 0;
    double value = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct VerifyConfig {
    unsigned long long seed = 42;
    int truncation_N = 64;
    int grid = 8192;
    int degree = 4;
    long budget = 20000;
    int trials = 8;
    /// Replaces every bound by -inf so that all checks fail (harness self-test).
    bool corrupt_tolerance = false;
};

/// Quaternion with independent N(0, sigma^2) components.
Quaternion random_quaternion(std::mt19937_64& rng, double sigma = 1.0);

/// Random Laurent polynomial with support in [lo, hi], coefficient moduli <= max_modulus.
SliceLaurentSeries random_series(std::mt19937_64& rng, int lo, int hi, double max_modulus = 10.0);

/// Symbol with nonzero coefficients at -1 .. -k (k <= max_negative) and an
/// analytic part of degree <= max_positive.
SliceLaurentSeries random_symbol(std::mt19937_64& rng, int max_negative = 4, int max_positive = 3);

/// sup over `samples` uniformly drawn J of |a + J b| (sampling oracle).
double sampled_sphere_sup(const Quaternion& a, const Quaternion& b, std::mt19937_64& rng,
                          int samples = 10000);

/// Runs every suite for trials seed, seed+1, ...; rows are ordered by trial.
std::vector<CheckRow> run_verify(const VerifyConfig& config);

}  // namespace qslice::checks
