#include "qslice/slice_series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "qslice/kernels.hpp"

namespace qslice {

namespace {

void require_finite(const Quaternion& c) {
    if (!c.finite()) throw DomainError("non-finite coefficient");
}

}  // namespace

SliceLaurentSeries::SliceLaurentSeries(std::initializer_list<std::pair<int, Quaternion>> terms) {
    for (const auto& [n, c] : terms) add(n, c);
}

SliceLaurentSeries SliceLaurentSeries::monomial(int n, const Quaternion& c) {
    SliceLaurentSeries f;
    f.set(n, c);
    return f;
}

SliceLaurentSeries SliceLaurentSeries::from_dense(int lo, std::vector<Quaternion> coeffs) {
    for (const auto& c : coeffs) require_finite(c);
    SliceLaurentSeries f;
    f.lo_ = lo;
    f.c_ = std::move(coeffs);
    f.trim();
    return f;
}

Quaternion SliceLaurentSeries::coeff(int n) const {
    if (c_.empty() || n < lo_ || n > n_max()) return {};
    return c_[static_cast<std::size_t>(n - lo_)];
}

void SliceLaurentSeries::grow_to(int n) {
    if (c_.empty()) {
        lo_ = n;
        c_.assign(1, Quaternion{});
        return;
    }
    if (n < lo_) {
        c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - n), Quaternion{});
        lo_ = n;
    } else if (n > n_max()) {
        c_.resize(static_cast<std::size_t>(n - lo_ + 1));
    }
}

void SliceLaurentSeries::trim() {
    const Quaternion zero{};
    auto first = std::find_if(c_.begin(), c_.end(), [&](const Quaternion& q) { return !(q == zero); });
    if (first == c_.end()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    auto last = std::find_if(c_.rbegin(), c_.rend(), [&](const Quaternion& q) { return !(q == zero); });
    c_.erase(last.base(), c_.end());
    lo_ += static_cast<int>(first - c_.begin());
    c_.erase(c_.begin(), first);
}

void SliceLaurentSeries::set(int n, const Quaternion& c) {
    require_finite(c);
    if (c == Quaternion{} && (c_.empty() || n < lo_ || n > n_max())) return;
    grow_to(n);
    c_[static_cast<std::size_t>(n - lo_)] = c;
    trim();
}

void SliceLaurentSeries::add(int n, const Quaternion& c) {
    require_finite(c);
    if (c == Quaternion{}) return;
    grow_to(n);
    c_[static_cast<std::size_t>(n - lo_)] += c;
    trim();
}

int SliceLaurentSeries::max_abs_index() const {
    if (c_.empty()) return 0;
    return std::max(std::abs(n_min()), std::abs(n_max()));
}

SliceLaurentSeries& SliceLaurentSeries::operator+=(const SliceLaurentSeries& o) {
    if (o.is_zero()) return *this;
    grow_to(o.n_min());
    grow_to(o.n_max());
    for (int n = o.n_min(); n <= o.n_max(); ++n) c_[static_cast<std::size_t>(n - lo_)] += o.coeff(n);
    trim();
    return *this;
}

SliceLaurentSeries& SliceLaurentSeries::operator-=(const SliceLaurentSeries& o) {
    if (o.is_zero()) return *this;
    grow_to(o.n_min());
    grow_to(o.n_max());
    for (int n = o.n_min(); n <= o.n_max(); ++n) c_[static_cast<std::size_t>(n - lo_)] -= o.coeff(n);
    trim();
    return *this;
}

SliceLaurentSeries operator*(const SliceLaurentSeries& f, const Quaternion& c) {
    std::vector<Quaternion> out(f.dense().begin(), f.dense().end());
    for (auto& a : out) a = a * c;
    return SliceLaurentSeries::from_dense(f.n_min(), std::move(out));
}

SliceSample slice_components(const SliceLaurentSeries& f, double t) {
    SliceSample s;
    s.angle = t;
    int n = f.n_min();
    for (const auto& c : f.dense()) {
        const double nt = static_cast<double>(n) * t;
        s.a += c * std::cos(nt);
        s.b += c * std::sin(nt);
        ++n;
    }
    return s;
}

Quaternion evaluate(const SliceLaurentSeries& f, const BoundaryPoint& p) {
    return slice_components(f, p.angle()).at(p.unit());
}

Quaternion extend_from_slice(const std::function<Quaternion(double)>& slice_values,
                             const ImaginaryUnit& I, const BoundaryPoint& target) {
    const double t = target.angle();
    const Quaternion JI = target.unit().quaternion() * I.quaternion();
    const Quaternion left = (Quaternion::one() - JI) * 0.5;
    const Quaternion right = (Quaternion::one() + JI) * 0.5;
    return left * slice_values(t) + right * slice_values(-t);
}

SliceLaurentSeries star_mul(const SliceLaurentSeries& f, const SliceLaurentSeries& g) {
    if (f.is_zero() || g.is_zero()) return {};
    const auto a = f.dense();
    const auto b = g.dense();
    std::vector<Quaternion> out(a.size() + b.size() - 1);
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t l = 0; l < b.size(); ++l) out[k + l] += a[k] * b[l];
    return SliceLaurentSeries::from_dense(f.n_min() + g.n_min(), std::move(out));
}

SliceLaurentSeries conj_c(const SliceLaurentSeries& f) {
    std::vector<Quaternion> out(f.dense().begin(), f.dense().end());
    for (auto& a : out) a = conj(a);
    return SliceLaurentSeries::from_dense(f.n_min(), std::move(out));
}

SliceLaurentSeries symmetrize(const SliceLaurentSeries& f) {
    const auto raw = star_mul(f, conj_c(f));
    std::vector<Quaternion> out(raw.dense().begin(), raw.dense().end());
    for (auto& a : out) a = Quaternion{a.w};
    return SliceLaurentSeries::from_dense(raw.n_min(), std::move(out));
}

StarReciprocal::StarReciprocal(const SliceLaurentSeries& f, double tol)
    : sym_(symmetrize(f)), conj_(conj_c(f)), tol_(tol) {}

double StarReciprocal::symmetrization_modulus(const BoundaryPoint& p) const {
    return evaluate(sym_, p).abs();
}

Quaternion StarReciprocal::at(const BoundaryPoint& p) const {
    const Quaternion s = evaluate(sym_, p);
    if (!(s.abs() > tol_)) throw DomainError("symmetrization vanishes at point");
    return inverse(s) * evaluate(conj_, p);
}

Quaternion recip_star_at(const SliceLaurentSeries& f, const BoundaryPoint& p, double tol) {
    return StarReciprocal(f, tol).at(p);
}

Quaternion star_eval(const SliceLaurentSeries& f, const SliceLaurentSeries& g,
                     const BoundaryPoint& p) {
    const Quaternion fp = evaluate(f, p);
    if (fp.abs() <= 1e-12) return {};
    const Quaternion moved = inverse(fp) * p.value() * fp;
    return fp * evaluate(g, BoundaryPoint::from_quaternion(moved, p.unit()));
}

SliceLaurentSeries project_plus(const SliceLaurentSeries& f) {
    if (f.is_zero() || f.n_max() < 0) return {};
    const int lo = std::max(0, f.n_min());
    const auto d = f.dense();
    return SliceLaurentSeries::from_dense(
        lo, std::vector<Quaternion>(d.begin() + (lo - f.n_min()), d.end()));
}

SliceLaurentSeries project_minus(const SliceLaurentSeries& f) {
    if (f.is_zero() || f.n_min() >= 0) return {};
    const int hi = std::min(-1, f.n_max());
    const auto d = f.dense();
    return SliceLaurentSeries::from_dense(
        f.n_min(), std::vector<Quaternion>(d.begin(), d.begin() + (hi - f.n_min() + 1)));
}

Quaternion l2_inner(const SliceLaurentSeries& f, const SliceLaurentSeries& g) {
    Quaternion acc;
    if (f.is_zero() || g.is_zero()) return acc;
    const int lo = std::max(f.n_min(), g.n_min());
    const int hi = std::min(f.n_max(), g.n_max());
    for (int n = lo; n <= hi; ++n) acc += conj(g.coeff(n)) * f.coeff(n);
    return acc;
}

double l2_norm(const SliceLaurentSeries& f) {
    double s = 0.0;
    for (const auto& a : f.dense()) s += a.norm2();
    return std::sqrt(s);
}

double sphere_sup(const Quaternion& a, const Quaternion& b) {
    const Quaternion cross = b * conj(a);
    const double im = std::sqrt(cross.x * cross.x + cross.y * cross.y + cross.z * cross.z);
    return std::sqrt(a.norm2() + b.norm2() + 2.0 * im);
}

int linf_grid_guard(const SliceLaurentSeries& f) { return 4 * f.max_abs_index() + 16; }

double linf_norm(const SliceLaurentSeries& f, int grid, Exec exec) {
    if (grid < linf_grid_guard(f))
        throw ParameterError("linf_norm: grid " + std::to_string(grid) + " below resolution guard " +
                             std::to_string(linf_grid_guard(f)));
    if (f.is_zero()) return 0.0;
    const auto samples = kernels::sample_reference_slice(f, grid, exec);
    return kernels::slice_sup_max(samples, exec);
}

double bmo_norm(const SliceLaurentSeries& f, const BmoOptions& options, Exec exec) {
    if (options.grid < 2 || options.n_units < 0 || options.n_arcs < 1)
        throw ParameterError("bmo_norm: sampling parameters must be positive");
    if (f.is_zero()) return 0.0;
    std::mt19937_64 rng(options.seed);
    std::vector<ImaginaryUnit> units{ImaginaryUnit::i()};
    for (int u = 0; u < options.n_units; ++u) units.push_back(sample_sphere(rng));
    const auto samples = kernels::sample_reference_slice(f, options.grid, exec);
    return kernels::bmo_sup(samples, units, options.n_arcs, exec);
}

}  // namespace qslice
