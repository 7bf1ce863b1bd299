#include "qslice/nehari.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <sstream>

#include "qslice/errors.hpp"
#include "qslice/kernels.hpp"

namespace qslice {

namespace {

using kernels::UnitCircleTable;

// (a(t_m), b(t_m)) of f from the angle table.
void components(const SliceLaurentSeries& f, const UnitCircleTable& table, int m, Quaternion& a,
                Quaternion& b) {
    a = {};
    b = {};
    long long n = f.n_min();
    for (const auto& c : f.dense()) {
        const int k = table.index(n, m);
        a += c * table.cos[k];
        b += c * table.sin[k];
        ++n;
    }
}

Quaternion pure_unit(const Quaternion& q) {
    const double v = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    return {0.0, q.x / v, q.y / v, q.z / v};
}

struct FftwDeleter {
    void operator()(fftw_complex* p) const { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwDeleter>;

FftwBuffer fftw_buffer(std::size_t n) {
    return FftwBuffer(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n)));
}

// Fourier coefficients f_hat(n), n in [-(grid/2-1), grid/2-1], of reference
// slice samples. Left multiplication by e^{-int} acts on q = z1 + z2 j as
// complex multiplication of z1 and z2 separately.
std::vector<Quaternion> slice_fourier(std::span<const Quaternion> samples) {
    const int g = static_cast<int>(samples.size());
    auto in1 = fftw_buffer(g), in2 = fftw_buffer(g), out1 = fftw_buffer(g), out2 = fftw_buffer(g);
    for (int m = 0; m < g; ++m) {
        in1[m][0] = samples[m].w;
        in1[m][1] = samples[m].x;
        in2[m][0] = samples[m].y;
        in2[m][1] = samples[m].z;
    }
    fftw_plan p1 = fftw_plan_dft_1d(g, in1.get(), out1.get(), FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_plan p2 = fftw_plan_dft_1d(g, in2.get(), out2.get(), FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_execute(p1);
    fftw_execute(p2);
    fftw_destroy_plan(p1);
    fftw_destroy_plan(p2);

    const int half = g / 2;
    std::vector<Quaternion> coeffs(2 * half - 1);
    const double scale = 1.0 / g;
    for (int n = -(half - 1); n <= half - 1; ++n) {
        const int idx = (n % g + g) % g;
        coeffs[n + half - 1] = Quaternion{out1[idx][0], out1[idx][1], out2[idx][0], out2[idx][1]} * scale;
    }
    return coeffs;
}

}  // namespace

std::size_t min_truncation(const SliceLaurentSeries& phi) {
    const std::size_t neg = (!phi.is_zero() && phi.n_min() < 0) ? static_cast<std::size_t>(-phi.n_min()) : 0;
    return 2 * neg + 8;
}

double hankel_norm(const SliceLaurentSeries& phi, std::size_t n, const NormOptions& options) {
    if (n < min_truncation(phi))
        throw ParameterError("hankel_norm: truncation " + std::to_string(n) + " below " +
                             std::to_string(min_truncation(phi)));
    return operator_norm(hankel_from_symbol(phi, n).matrix(), options);
}

SliceLaurentSeries maximizing_vector(const SliceLaurentSeries& phi, std::size_t n,
                                     const NormOptions& options) {
    auto top = top_singular(hankel_from_symbol(phi, n).matrix(), options);
    if (top.sigma == 0.0) throw DomainError("maximizing_vector: zero Hankel operator");
    return SliceLaurentSeries::from_dense(0, std::move(top.vector));
}

ConstructiveResult constructive_from_maximizer(const SliceLaurentSeries& phi,
                                               const SliceLaurentSeries& g, std::size_t n,
                                               int grid, Exec exec) {
    if (grid < 4) throw ParameterError("constructive_best_approx: grid too small");
    const auto h = apply_H(phi, g);
    const auto gs = symmetrize(g);
    const auto gc = conj_c(g);
    const UnitCircleTable table(grid);
    const Quaternion ref = Quaternion::i();

    std::vector<Quaternion> w(grid), f(grid);
    std::vector<char> excluded(grid, 0);

    auto point = [&](int m) {
        Quaternion a, b;
        components(phi, table, m, a, b);
        const Quaternion phi_p = a + kernels::mul_i(b);
        components(h, table, m, a, b);
        const Quaternion hp = a + kernels::mul_i(b);
        Quaternion wm;
        if (hp.abs() > 1e-12) {
            // h(p)^{-1} p h(p) = e^{t J'} with J' = h(p)^{-1} i h(p)
            const Quaternion J = pure_unit(inverse(hp) * ref * hp);
            components(gs, table, m, a, b);
            const Quaternion sym = a + J * b;
            if (sym.abs() > default_recip_tolerance) {
                components(gc, table, m, a, b);
                wm = hp * inverse(sym) * (a + J * b);
            } else {
                excluded[m] = 1;
            }
        }
        w[m] = wm;
        f[m] = phi_p - wm;
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (int m = 0; m < grid; ++m) point(m);
    } else {
        for (int m = 0; m < grid; ++m) point(m);
    }

    ConstructiveResult out;
    out.excluded = static_cast<int>(std::count(excluded.begin(), excluded.end(), 1));
    out.warning = out.excluded * 100 > grid;
    out.distance = kernels::slice_sup_max(w, exec);

    const auto spectrum = slice_fourier(f);
    const int half = grid / 2;
    double neg = 0.0;
    for (int k = -(half - 1); k <= -1; ++k) neg += spectrum[k + half - 1].norm2();
    out.residual_negative_mass = std::sqrt(neg);

    double peak = 0.0;
    for (int k = 0; k <= half - 1; ++k) peak = std::max(peak, spectrum[k + half - 1].abs());
    const int top = std::min<int>(static_cast<int>(n) - 1, half - 1);
    for (int k = 0; k <= top; ++k) {
        const auto& c = spectrum[k + half - 1];
        if (c.abs() > 1e-13 * peak) out.approximant.set(k, c);
    }
    out.samples = std::move(f);
    return out;
}

ConstructiveResult constructive_best_approx(const SliceLaurentSeries& phi, std::size_t n, int grid,
                                            const NormOptions& options) {
    auto top = top_singular(hankel_from_symbol(phi, n).matrix(), options);
    SliceLaurentSeries g;
    if (top.sigma > 0.0) g = SliceLaurentSeries::from_dense(0, std::move(top.vector));
    return constructive_from_maximizer(phi, g, n, grid, options.exec);
}

namespace {

double& component(Quaternion& q, int c) {
    switch (c) {
        case 0: return q.w;
        case 1: return q.x;
        case 2: return q.y;
        default: return q.z;
    }
}

// Residual phi - f sampled as (a(t_m), b(t_m)) on the half circle m = 0..grid/2.
class MinimaxObjective {
public:
    MinimaxObjective(const SliceLaurentSeries& phi, int degree, int grid)
        : degree_(degree), half_(grid / 2), table_(grid), a0_(half_ + 1), b0_(half_ + 1) {
        for (int m = 0; m <= half_; ++m) components(phi, table_, m, a0_[m], b0_[m]);
    }

    int half() const { return half_; }

    void resync(std::span<const Quaternion> x, std::vector<Quaternion>& a,
                std::vector<Quaternion>& b) const {
        a = a0_;
        b = b0_;
        for (int m = 0; m <= half_; ++m)
            for (int n = 0; n <= degree_; ++n) {
                const int k = table_.index(n, m);
                a[m] -= x[n] * table_.cos[k];
                b[m] -= x[n] * table_.sin[k];
            }
    }

    static double value(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b, int& argmax) {
        double best = -1.0;
        for (std::size_t m = 0; m < a.size(); ++m) {
            const double v = sphere_sup(a[m], b[m]);
            if (v > best) {
                best = v;
                argmax = static_cast<int>(m);
            }
        }
        return best;
    }

    // Objective after adding delta to component c of coefficient n. Stops
    // early (returning a value >= bound) once the bound is reached.
    double probe(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b, int n, int c,
                 double delta, double bound, int start, bool& complete, int& argmax) const {
        double best = -1.0;
        const int count = half_ + 1;
        for (int r = 0; r < count; ++r) {
            const int m = (start + r) % count;
            const int k = table_.index(n, m);
            Quaternion am = a[m], bm = b[m];
            component(am, c) -= table_.cos[k] * delta;
            component(bm, c) -= table_.sin[k] * delta;
            const double v = sphere_sup(am, bm);
            if (v > best) {
                best = v;
                argmax = m;
            }
            if (best >= bound) {
                complete = false;
                return best;
            }
        }
        complete = true;
        return best;
    }

    void apply(std::vector<Quaternion>& a, std::vector<Quaternion>& b, int n, int c, double delta) const {
        for (int m = 0; m <= half_; ++m) {
            const int k = table_.index(n, m);
            component(a[m], c) -= table_.cos[k] * delta;
            component(b[m], c) -= table_.sin[k] * delta;
        }
    }

private:
    int degree_;
    int half_;
    UnitCircleTable table_;
    std::vector<Quaternion> a0_;
    std::vector<Quaternion> b0_;
};

struct StartResult {
    std::vector<Quaternion> x;
    double value = 0.0;
    double min_evaluated = 0.0;
    long evaluations = 0;
    bool exhausted = false;
    std::vector<double> trace;
};

StartResult pattern_search(const MinimaxObjective& obj, std::vector<Quaternion> x, double scale,
                           long budget) {
    StartResult out;
    std::vector<Quaternion> a, b;
    obj.resync(x, a, b);
    int argmax = 0;
    double cur = MinimaxObjective::value(a, b, argmax);
    out.evaluations = 1;
    out.min_evaluated = cur;
    out.trace.push_back(cur);

    const int degree = static_cast<int>(x.size()) - 1;
    double step = 0.5 * scale;
    const double min_step = 1e-10 * scale;
    while (step >= min_step && cur > 0.0) {
        bool improved = false;
        for (int n = 0; n <= degree && !out.exhausted; ++n)
            for (int c = 0; c < 4 && !out.exhausted; ++c)
                for (double sign : {1.0, -1.0}) {
                    if (out.evaluations >= budget) {
                        out.exhausted = true;
                        break;
                    }
                    bool complete = false;
                    int where = argmax;
                    const double v = obj.probe(a, b, n, c, sign * step, cur, argmax, complete, where);
                    ++out.evaluations;
                    if (!complete) continue;
                    // a completed probe never reached the bound, so it improves
                    out.min_evaluated = std::min(out.min_evaluated, v);
                    obj.apply(a, b, n, c, sign * step);
                    component(x[n], c) += sign * step;
                    cur = v;
                    argmax = where;
                    improved = true;
                    break;
                }
        out.trace.push_back(std::min(out.trace.back(), cur));
        if (out.exhausted) break;
        if (!improved) {
            step *= 0.5;
            obj.resync(x, a, b);
            cur = MinimaxObjective::value(a, b, argmax);
            out.min_evaluated = std::min(out.min_evaluated, cur);
        }
    }
    out.value = cur;
    out.x = std::move(x);
    return out;
}

}  // namespace

OptimizeResult optimize_distance(const SliceLaurentSeries& phi, const OptimizeOptions& options) {
    if (options.degree < 0) throw ParameterError("optimize_distance: degree must be >= 0");
    if (options.budget <= 0) throw ParameterError("optimize_distance: budget must be positive");
    const int starts = std::max(1, options.starts);
    const int d = options.degree;
    const int guard = 4 * std::max(phi.max_abs_index(), d) + 16;
    if (options.grid < guard)
        throw ParameterError("optimize_distance: grid below resolution guard " + std::to_string(guard));

    double scale = 0.0;
    for (const auto& c : phi.dense()) scale = std::max(scale, c.abs());

    OptimizeResult result;
    if (scale == 0.0) {
        result.traces.assign(1, {0.0});
        return result;
    }

    const MinimaxObjective objective(phi, d, options.grid);
    std::vector<Quaternion> analytic(d + 1);
    for (int n = 0; n <= d; ++n) analytic[n] = phi.coeff(n);

    std::vector<std::vector<Quaternion>> initial(starts);
    for (int s = 0; s < starts; ++s) {
        if (s == 0) {
            initial[s].assign(d + 1, Quaternion{});
            continue;
        }
        initial[s] = analytic;
        if (s == 1) continue;
        std::mt19937_64 rng(options.seed + static_cast<unsigned long long>(s));
        std::normal_distribution<double> gauss(0.0, 0.5 * scale);
        for (auto& q : initial[s]) q += Quaternion{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    }

    std::vector<StartResult> runs(starts);
    auto run = [&](int s) {
        const long share = options.budget / starts + (s < options.budget % starts ? 1 : 0);
        runs[s] = pattern_search(objective, initial[s], scale, std::max(1L, share));
    };
    if (options.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int s = 0; s < starts; ++s) run(s);
    } else {
        for (int s = 0; s < starts; ++s) run(s);
    }

    // merge in start order so ties resolve identically under any schedule
    int best = 0;
    result.min_evaluated = runs[0].min_evaluated;
    for (int s = 0; s < starts; ++s) {
        if (runs[s].value < runs[best].value) best = s;
        result.min_evaluated = std::min(result.min_evaluated, runs[s].min_evaluated);
        result.evaluations += runs[s].evaluations;
        result.budget_exhausted = result.budget_exhausted || runs[s].exhausted;
        result.traces.push_back(std::move(runs[s].trace));
    }
    result.f = SliceLaurentSeries::from_dense(0, runs[best].x);
    result.distance = linf_norm(phi - result.f, options.grid, options.exec);
    return result;
}

ApproximationRun approximate(const SliceLaurentSeries& phi, std::size_t n, const OptimizeOptions& options) {
    NormOptions norm_options;
    norm_options.exec = options.exec;

    ApproximationRun run;
    auto& r = run.report;
    r.hankel_norm = hankel_norm(phi, n, norm_options);
    run.constructive = constructive_best_approx(phi, n, options.grid, norm_options);
    run.optimized = optimize_distance(phi, options);
    r.constructive_distance = run.constructive.distance;
    r.optimized_distance = run.optimized.distance;
    r.best_approx = run.constructive.approximant;
    r.residual_negative_mass = run.constructive.residual_negative_mass;
    r.truncation_N = static_cast<int>(n);
    r.grid = options.grid;
    return run;
}

std::vector<std::string> report_violations(const ApproximationReport& report, double tol) {
    std::vector<std::string> out;
    const double slack = tol * std::max(1.0, report.hankel_norm);
    auto check = [&](const char* name, double distance) {
        if (report.hankel_norm > distance + slack) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "hankel_norm " << report.hankel_norm << " exceeds " << name << " " << distance;
            out.push_back(msg.str());
        }
    };
    check("constructive_distance", report.constructive_distance);
    check("optimized_distance", report.optimized_distance);
    return out;
}

SliceLaurentSeries symbol_from_sequence(std::span<const Quaternion> alpha) {
    const int len = static_cast<int>(alpha.size());
    std::vector<Quaternion> dense(alpha.rbegin(), alpha.rend());
    return SliceLaurentSeries::from_dense(-len, std::move(dense));
}

NehariBoundsReport verify_nehari_bounds(std::span<const Quaternion> alpha, std::size_t n,
                                        const OptimizeOptions& options, double tol) {
    NehariBoundsReport out;
    NormOptions norm_options;
    norm_options.exec = options.exec;

    // the finite sequence's operator lives in the leading alpha.size() block
    const std::size_t gamma_n = std::max(n, alpha.size());
    out.gamma_norm = operator_norm(build_hankel_matrix(alpha, gamma_n), norm_options);

    const auto phi = symbol_from_sequence(alpha);
    const std::size_t symbol_n = std::max(n, min_truncation(phi));
    try {
        out.constructive_distance =
            constructive_best_approx(phi, symbol_n, options.grid, norm_options).distance;
        out.optimized_distance = optimize_distance(phi, options).distance;
    } catch (const std::exception& e) {
        out.failures.push_back(std::string("distance computation failed: ") + e.what());
        return out;
    }
    out.distance = std::min(out.constructive_distance, out.optimized_distance);
    const double d = out.distance;
    const double gamma = out.gamma_norm;
    out.ratio = d > 0.0 ? gamma / d : 0.0;
    out.lower_bound_holds = d * (1.0 - tol) <= gamma;
    out.upper_bound_holds = gamma <= 2.0 * d * (1.0 + tol);
    out.equality_holds = std::abs(gamma - d) <= tol * std::max(gamma, d);

    std::ostringstream msg;
    msg.precision(17);
    if (!out.lower_bound_holds) {
        msg << "lower bound violated: d=" << d << " gamma=" << gamma;
        out.failures.push_back(msg.str());
        msg.str("");
    }
    if (!out.upper_bound_holds) {
        msg << "upper bound violated: gamma=" << gamma << " 2d=" << 2.0 * d;
        out.failures.push_back(msg.str());
    }
    return out;
}

}  // namespace qslice
