// qslice: experiment runner.
//   qslice verify   [--seed --n --grid --degree --budget --trials --out --debug-corrupt]
//   qslice distance --symbol FILE [--n --grid --degree --budget --seed --out]
//   qslice norm     --symbol FILE [--n --out --dump-matrix FILE]
//   qslice hilbert  [--n --seed --out]
//   qslice demo
// --config FILE (TOML/INI, top-level keys named like the flags); flags win.
// Exit status: 0 pass, 1 check failure, 2 usage, parse or I/O error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qslice/checks.hpp"
#include "qslice/errors.hpp"
#include "qslice/hankel.hpp"
#include "qslice/io.hpp"
#include "qslice/nehari.hpp"

namespace {

using namespace qslice;

struct Config {
    unsigned long long seed = 42;
    int n = 64;
    int grid = 8192;
    int degree = 4;
    long budget = 20000;
    int trials = 8;
    std::string out;
    std::string symbol;
    std::string dump_matrix;
    bool debug_corrupt = false;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string compact(const SliceLaurentSeries& f) {
    return nlohmann::json::parse(io::series_to_text(f)).dump();
}

void emit(const Config& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    io::write_text(cfg.out, text);
}

OptimizeOptions optimize_options(const Config& cfg) {
    OptimizeOptions o;
    o.degree = cfg.degree;
    o.grid = cfg.grid;
    o.budget = cfg.budget;
    o.seed = cfg.seed;
    return o;
}

void require_positive(const Config& cfg) {
    if (cfg.n <= 0 || cfg.grid <= 0 || cfg.degree < 0 || cfg.budget <= 0 || cfg.trials < 0)
        throw ParameterError("sizes must be positive");
}

int cmd_verify(const Config& cfg) {
    checks::VerifyConfig vc;
    vc.seed = cfg.seed;
    vc.truncation_N = cfg.n;
    vc.grid = cfg.grid;
    vc.degree = cfg.degree;
    vc.budget = cfg.budget;
    vc.trials = cfg.trials;
    vc.corrupt_tolerance = cfg.debug_corrupt;
    const auto rows = checks::run_verify(vc);

    std::ostringstream os;
    os << "suite,check,seed,value,bound,pass\n";
    bool ok = true;
    for (const auto& r : rows) {
        os << r.suite << ',' << r.check << ',' << r.seed << ',' << num(r.value) << ',' << num(r.bound)
           << ',' << (r.pass ? "pass" : "fail") << '\n';
        ok = ok && r.pass;
    }
    emit(cfg, os.str());
    return ok ? 0 : 1;
}

int cmd_distance(const Config& cfg) {
    const auto phi = io::read_series(cfg.symbol);
    const auto n = std::max<std::size_t>(static_cast<std::size_t>(cfg.n), min_truncation(phi));
    const auto run = approximate(phi, n, optimize_options(cfg));
    emit(cfg, io::report_to_text(run.report) + "\n");
    const auto problems = report_violations(run.report);
    for (const auto& p : problems) std::cerr << "violation: " << p << '\n';
    return problems.empty() ? 0 : 1;
}

int cmd_norm(const Config& cfg) {
    const auto phi = io::read_series(cfg.symbol);
    const auto n = std::max<std::size_t>(static_cast<std::size_t>(cfg.n), min_truncation(phi));
    if (!cfg.dump_matrix.empty())
        io::write_text(cfg.dump_matrix, io::matrix_to_text(hankel_from_symbol(phi, n).matrix()) + "\n");
    const double norm = hankel_norm(phi, n);
    emit(cfg, "{\"hankel_norm\":" + num(norm) + ",\"truncation_N\":" + std::to_string(n) + "}\n");
    return 0;
}

int cmd_hilbert(const Config& cfg) {
    std::ostringstream os;
    os << "suite,seed,N,value,bound,pass\n";
    bool ok = true;
    double prev = 0.0;
    const auto top = static_cast<std::size_t>(cfg.n);
    for (std::size_t n = 1; n <= top; n *= 2) {
        QuaternionSequence alpha(2 * n - 1);
        for (std::size_t m = 0; m < alpha.size(); ++m) alpha[m] = 1.0 / static_cast<double>(m + 1);
        const double v = operator_norm(build_hankel_matrix(alpha, n));
        const bool pass = v < std::numbers::pi && v >= prev * (1.0 - 1e-12);
        ok = ok && pass;
        prev = std::max(prev, v);
        os << "hilbert," << cfg.seed << ',' << n << ',' << num(v) << ',' << num(std::numbers::pi) << ','
           << (pass ? "pass" : "fail") << '\n';
    }
    emit(cfg, os.str());
    return ok ? 0 : 1;
}

int cmd_demo(const Config& cfg) {
    const Quaternion c{0.0, 0.0, 0.0, 1.0};
    const auto phi = SliceLaurentSeries::monomial(-1, c);
    const std::size_t n = 16;
    std::ostringstream os;
    os << "# symbol phi(q) = q^-1 c with c = k; H_phi has rank one\n";
    os << "symbol " << compact(phi) << '\n';
    os << "# Hankel matrix alpha(j+k), alpha_0 = c, all other entries zero\n";
    const double norm = hankel_norm(phi, n);
    os << "hankel_norm " << num(norm) << "  (expected |c| = " << num(c.abs()) << ")\n";
    const auto g = maximizing_vector(phi, n);
    os << "# maximizing vector g, unit in H^2\n";
    os << "g " << compact(g) << '\n';
    os << "# H_phi g = P_-(phi * g)\n";
    os << "H_phi_g " << compact(apply_H(phi, g)) << '\n';
    os << "# best approximation f = phi - (H_phi g) * g^{-*}, evaluated on the boundary\n";
    const auto cons = constructive_from_maximizer(phi, g, n, 1024);
    os << "constructive_distance " << num(cons.distance) << '\n';
    os << "residual_negative_mass " << num(cons.residual_negative_mass) << '\n';
    os << "best_approx " << compact(cons.approximant) << '\n';
    os << "# the zero function is already optimal: ||phi - 0||_inf = |c|\n";
    os << "linf_phi " << num(linf_norm(phi, 1024)) << '\n';
    emit(cfg, os.str());
    const bool ok = std::abs(norm - c.abs()) <= 1e-12 && std::abs(cons.distance - c.abs()) <= 1e-6;
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quaternionic slice functions, Hankel operators and best approximation"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML/INI file with the same keys as the flags");

    Config cfg;
    app.add_option("--seed", cfg.seed, "master seed");
    app.add_option("--n", cfg.n, "truncation size N");
    app.add_option("--grid", cfg.grid, "boundary sample count");
    app.add_option("--degree", cfg.degree, "optimizer polynomial degree");
    app.add_option("--budget", cfg.budget, "optimizer evaluation budget");
    app.add_option("--trials", cfg.trials, "random instances for verify");
    app.add_option("--out", cfg.out, "output file (stdout when omitted)");
    app.add_option("--symbol", cfg.symbol, "symbol file");
    app.add_flag("--debug-corrupt", cfg.debug_corrupt, "self-test: every check fails");

    auto* verify = app.add_subcommand("verify", "run the property suites over random instances");
    auto* distance = app.add_subcommand("distance", "Hankel norm and distance from H^inf of a symbol");
    auto* norm = app.add_subcommand("norm", "Hankel norm of a symbol");
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert matrix norm table");
    auto* demo = app.add_subcommand("demo", "rank-one worked example");
    for (auto* sub : {verify, distance, norm, hilbert, demo}) sub->fallthrough();
    norm->add_option("--dump-matrix", cfg.dump_matrix, "write the truncated Hankel matrix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        require_positive(cfg);
        if ((distance->parsed() || norm->parsed()) && cfg.symbol.empty())
            throw ParameterError("--symbol is required");
        if (verify->parsed()) return cmd_verify(cfg);
        if (distance->parsed()) return cmd_distance(cfg);
        if (norm->parsed()) return cmd_norm(cfg);
        if (hilbert->parsed()) return cmd_hilbert(cfg);
        return cmd_demo(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
