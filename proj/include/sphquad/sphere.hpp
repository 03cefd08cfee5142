#pragma once

#include <array>
#include <cmath>

namespace sphquad {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
    friend Vec3 operator*(const Vec3& a, double s) { return s * a; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
};

/// Point constrained to the unit sphere. Construction either rejects or
/// renormalizes off-sphere input; afterwards |p| = 1 to machine precision.
class UnitPoint {
public:
    UnitPoint() : v_{0.0, 0.0, 1.0} {}

    /// Accepts input within 1e-8 of unit length (renormalized), rejects otherwise.
    static UnitPoint checked(double x, double y, double z);
    static UnitPoint checked(const Vec3& v) { return checked(v.x, v.y, v.z); }

    /// Rescales any nonzero vector onto the sphere.
    static UnitPoint normalized(double x, double y, double z);
    static UnitPoint normalized(const Vec3& v) { return normalized(v.x, v.y, v.z); }

    static UnitPoint north_pole() { return UnitPoint(); }
    static UnitPoint south_pole() { return UnitPoint(Vec3{0.0, 0.0, -1.0}); }

    const Vec3& vec() const { return v_; }
    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }
    double dot(const UnitPoint& o) const { return v_.dot(o.v_); }

private:
    explicit UnitPoint(const Vec3& v) : v_(v) {}
    Vec3 v_;
};

/// Colatitude theta in [0, pi], azimuth phi in [0, 2*pi).
struct SphericalCoord {
    double theta = 0.0;
    double phi = 0.0;
};

/// phi is canonicalized to 0 at the poles.
SphericalCoord to_spherical(const UnitPoint& p);
UnitPoint to_cartesian(const SphericalCoord& c);

/// Geodesic (great-circle) distance in [0, pi]; inner product clamped to [-1, 1].
double geodesic_distance(const UnitPoint& a, const UnitPoint& b);

class Rotation {
public:
    Rotation() : m_{1, 0, 0, 0, 1, 0, 0, 0, 1} {}
    explicit Rotation(const std::array<double, 9>& m) : m_(m) {}

    static Rotation identity() { return Rotation(); }
    static Rotation about_z(double angle);
    static Rotation about_y(double angle);

    Vec3 apply(const Vec3& v) const {
        return {m_[0] * v.x + m_[1] * v.y + m_[2] * v.z,
                m_[3] * v.x + m_[4] * v.y + m_[5] * v.z,
                m_[6] * v.x + m_[7] * v.y + m_[8] * v.z};
    }
    UnitPoint apply(const UnitPoint& p) const { return UnitPoint::normalized(apply(p.vec())); }

    friend Rotation operator*(const Rotation& a, const Rotation& b);

private:
    std::array<double, 9> m_;
};

/// Rotation Rz(phi0) * Ry(theta0) taking the north pole to x0; identity when
/// x0 is the north pole.
Rotation rotation_to(const UnitPoint& x0);

}  // namespace sphquad
