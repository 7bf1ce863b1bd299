#pragma once

// Quaternion arithmetic, the sphere of imaginary units and boundary points
// e^{tI} of the quaternionic unit ball.
//
// Components are stored as (w, x, y, z) along (1, i, j, k) with the Hamilton
// relations ij = k, jk = i, ki = j.

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "qslice/errors.hpp"

namespace qslice {

struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : w{w_}, x{x_}, y{y_}, z{z_} {}

    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr double real() const { return w; }
    constexpr std::array<double, 3> imag() const { return {x, y, z}; }

    constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
    double abs() const { return std::sqrt(norm2()); }

    bool finite() const {
        return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) { return p * q; }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

/// q^{-1} = conj(q) / |q|^2. Throws DomainError for q = 0.
Quaternion inverse(const Quaternion& q);

/// Point of the sphere S = {q : q^2 = -1}. The scalar part is always zero and
/// the vector part is renormalized on construction.
class ImaginaryUnit {
public:
    /// Throws DomainError if (x, y, z) is zero or not finite.
    ImaginaryUnit(double x, double y, double z);

    static ImaginaryUnit i() { return {1.0, 0.0, 0.0}; }
    static ImaginaryUnit j() { return {0.0, 1.0, 0.0}; }
    static ImaginaryUnit k() { return {0.0, 0.0, 1.0}; }

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }

    Quaternion quaternion() const { return {0.0, x_, y_, z_}; }
    operator Quaternion() const { return quaternion(); }

    ImaginaryUnit operator-() const { return {-x_, -y_, -z_}; }

private:
    double x_;
    double y_;
    double z_;
};

/// cos(t) + I sin(t).
Quaternion exp_unit(double t, const ImaginaryUnit& I);

/// Uniform sample of the imaginary-unit sphere (normalized 3-D Gaussian).
ImaginaryUnit sample_sphere(std::mt19937_64& rng);

/// Uniformly distributed unit quaternion (normalized 4-D Gaussian).
Quaternion sample_unit_quaternion(std::mt19937_64& rng);

/// The boundary point e^{tI} of the unit ball; angle is kept in [0, 2*pi).
class BoundaryPoint {
public:
    BoundaryPoint(const ImaginaryUnit& unit, double angle);

    /// Recovers (I, t) from a quaternion of modulus ~1. For real inputs (+-1)
    /// the unit is taken to be `fallback`.
    static BoundaryPoint from_quaternion(const Quaternion& q,
                                         const ImaginaryUnit& fallback = ImaginaryUnit::i());

    const ImaginaryUnit& unit() const { return unit_; }
    double angle() const { return angle_; }

    Quaternion value() const { return exp_unit(angle_, unit_); }

private:
    ImaginaryUnit unit_;
    double angle_;
};

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Reduces an angle into [0, 2*pi).
double reduce_angle(double t);

}  // namespace qslice
