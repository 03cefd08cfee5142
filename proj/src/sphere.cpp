#include "sphquad/sphere.hpp"

#include <algorithm>

#include "sphquad/errors.hpp"

namespace sphquad {

namespace {
constexpr double kUnitTol = 1e-8;
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace

UnitPoint UnitPoint::checked(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (std::abs(n - 1.0) > kUnitTol) {
        throw NotUnitError("point norm " + std::to_string(n) + " deviates from 1 by more than 1e-8");
    }
    // keep the caller's bits when they are unit to rounding error, so that
    // formatted files reload exactly; the band stays well inside the 1e-12
    // Legendre clamp tolerance that downstream kernels rely on.
    if (std::abs(n - 1.0) <= 1e-13) return UnitPoint(Vec3{x, y, z});
    return UnitPoint(Vec3{x / n, y / n, z / n});
}

UnitPoint UnitPoint::normalized(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw NotUnitError("cannot normalize zero or non-finite vector");
    }
    return UnitPoint(Vec3{x / n, y / n, z / n});
}

SphericalCoord to_spherical(const UnitPoint& p) {
    const double z = std::clamp(p.z(), -1.0, 1.0);
    SphericalCoord c;
    c.theta = std::acos(z);
    if (p.x() == 0.0 && p.y() == 0.0) {
        c.phi = 0.0;
        return c;
    }
    c.phi = std::atan2(p.y(), p.x());
    if (c.phi < 0.0) c.phi += kTwoPi;
    if (c.phi >= kTwoPi) c.phi = 0.0;
    return c;
}

UnitPoint to_cartesian(const SphericalCoord& c) {
    const double st = std::sin(c.theta);
    return UnitPoint::normalized(st * std::cos(c.phi), st * std::sin(c.phi), std::cos(c.theta));
}

double geodesic_distance(const UnitPoint& a, const UnitPoint& b) {
    return std::acos(std::clamp(a.dot(b), -1.0, 1.0));
}

Rotation Rotation::about_z(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return Rotation({c, -s, 0, s, c, 0, 0, 0, 1});
}

Rotation Rotation::about_y(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return Rotation({c, 0, s, 0, 1, 0, -s, 0, c});
}

Rotation operator*(const Rotation& a, const Rotation& b) {
    std::array<double, 9> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[3 * i + j] += a.m_[3 * i + k] * b.m_[3 * k + j];
    return Rotation(r);
}

Rotation rotation_to(const UnitPoint& x0) {
    const SphericalCoord c = to_spherical(x0);
    if (c.theta == 0.0) return Rotation::identity();
    return Rotation::about_z(c.phi) * Rotation::about_y(c.theta);
}

}  // namespace sphquad
