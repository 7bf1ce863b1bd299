#include "qslice/quaternion.hpp"

namespace qslice {

Quaternion inverse(const Quaternion& q) {
    const double n2 = q.norm2();
    if (!(n2 > 0.0)) throw DomainError("non-invertible: zero quaternion");
    return conj(q) * (1.0 / n2);
}

ImaginaryUnit::ImaginaryUnit(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (!(n > 0.0) || !std::isfinite(n))
        throw DomainError("imaginary unit requires a finite nonzero 3-vector");
    x_ = x / n;
    y_ = y / n;
    z_ = z / n;
}

Quaternion exp_unit(double t, const ImaginaryUnit& I) {
    const double c = std::cos(t);
    const double s = std::sin(t);
    return {c, s * I.x(), s * I.y(), s * I.z()};
}

ImaginaryUnit sample_sphere(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (;;) {
        const double x = gauss(rng);
        const double y = gauss(rng);
        const double z = gauss(rng);
        if (x * x + y * y + z * z > 1e-24) return {x, y, z};
    }
}

Quaternion sample_unit_quaternion(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (;;) {
        Quaternion q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
        const double n = q.abs();
        if (n > 1e-12) return q * (1.0 / n);
    }
}

double reduce_angle(double t) {
    double r = std::fmod(t, two_pi);
    if (r < 0.0) r += two_pi;
    // fmod of a value just below 0 can round up to exactly 2*pi
    if (r >= two_pi) r = 0.0;
    return r;
}

BoundaryPoint::BoundaryPoint(const ImaginaryUnit& unit, double angle)
    : unit_(unit), angle_(reduce_angle(angle)) {
    if (!std::isfinite(angle)) throw DomainError("boundary point angle must be finite");
}

BoundaryPoint BoundaryPoint::from_quaternion(const Quaternion& q, const ImaginaryUnit& fallback) {
    const double v = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    if (v <= 1e-300) return {fallback, q.w >= 0.0 ? 0.0 : std::numbers::pi};
    return {ImaginaryUnit{q.x, q.y, q.z}, std::atan2(v, q.w)};
}

}  // namespace qslice
