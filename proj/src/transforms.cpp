#include "sphquad/transforms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sphquad {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kSqrtPi = 1.7724538509055160272981674833411;

void check_theta(double theta) {
    if (!(theta >= -1e-12 && theta <= kPi + 1e-12)) {
        throw std::domain_error("colatitude outside [0, pi]: " + std::to_string(theta));
    }
}

void check_unit_interval(double t) {
    if (!(t >= -1e-12 && t <= 1.0 + 1e-12)) {
        throw std::domain_error("psi argument outside [0, 1]: " + std::to_string(t));
    }
}

void check_atkinson_q(double q) {
    if (!(q >= 1.0)) throw std::domain_error("Atkinson grading requires q >= 1");
}

void check_sidi_m(double m) {
    if (!(m >= 0.5)) throw std::domain_error("Sidi grading requires m >= 1/2");
}

bool is_integer(double m) { return std::abs(m - std::round(m)) < 1e-12; }

}  // namespace

void TransformSpec::validate() const {
    switch (kind) {
        case TransformKind::None:
            break;
        case TransformKind::Atkinson:
            check_atkinson_q(grading);
            break;
        case TransformKind::Sidi:
            check_sidi_m(grading);
            break;
    }
}

UnitPoint atkinson_map(double q, const UnitPoint& p) {
    check_atkinson_q(q);
    const double s = std::hypot(p.x(), p.y());
    const double z = p.z();
    if (s == 0.0) return p;  // poles are fixed points
    const double sq = std::pow(s, q);
    const double d = std::sqrt(z * z + sq * sq);
    return UnitPoint::normalized(p.x() / s * sq / d, p.y() / s * sq / d, z / d);
}

double atkinson_colatitude(double q, double theta) {
    check_atkinson_q(q);
    check_theta(theta);
    const double s = std::sin(theta);
    return std::atan2(std::pow(std::max(s, 0.0), q), std::cos(theta));
}

double atkinson_colatitude_inverse(double q, double theta_tilde) {
    check_atkinson_q(q);
    check_theta(theta_tilde);
    double lo = 0.0, hi = kPi;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (atkinson_colatitude(q, mid) < theta_tilde) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double atkinson_density(double q, double theta) {
    check_atkinson_q(q);
    check_theta(theta);
    const double s = std::max(std::sin(theta), 0.0);
    const double z = std::cos(theta);
    const double s2q = std::pow(s, 2.0 * q);
    return std::pow(s, 2.0 * q - 1.0) * (q * z * z + s * s) / std::pow(s2q + z * z, 1.5);
}

double atkinson_surface_factor(double q, double theta) {
    check_atkinson_q(q);
    check_theta(theta);
    const double s = std::max(std::sin(theta), 0.0);
    const double z = std::cos(theta);
    const double s2q = std::pow(s, 2.0 * q);
    // pow(0, 0) = 1 makes q = 1 exactly the identity factor at the poles.
    return std::pow(s, 2.0 * q - 2.0) * (q * z * z + s * s) / std::pow(s2q + z * z, 1.5);
}

double sidi_theta_total(double m) {
    check_sidi_m(m);
    return kSqrtPi * std::exp(std::lgamma(0.5 * (m + 1.0)) - std::lgamma(0.5 * m + 1.0)) / kPi;
}

namespace {

// Gauss series for F(1/2 - m/2, 1/2 + m/2; m/2 + 3/2; x), |x| <= 1/2 here.
double gauss_2f1(double a, double b, double c, double x) {
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 500; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// Valid on t in [0, 1/2] where the series argument stays in [0, 1/2].
double sidi_theta_half(double m, double t) {
    const double kk = std::sin(0.5 * kPi * t);
    const double x = kk * kk;
    const double f = gauss_2f1(0.5 - 0.5 * m, 0.5 + 0.5 * m, 0.5 * m + 1.5, x);
    return std::pow(2.0 * kk, m + 1.0) / (kPi * (m + 1.0)) * f;
}

}  // namespace

double sidi_theta(double m, double t) {
    check_sidi_m(m);
    check_unit_interval(t);
    t = std::clamp(t, 0.0, 1.0);
    if (t <= 0.5) return sidi_theta_half(m, t);
    return sidi_theta_total(m) - sidi_theta_half(m, 1.0 - t);
}

double sidi_psi_recursive(int m, double t) {
    if (m < 0) throw std::domain_error("psi recursion requires m >= 0");
    check_unit_interval(t);
    t = std::clamp(t, 0.0, 1.0);
    const double st = std::sin(kPi * t);
    const double ct = std::cos(kPi * t);
    double psi;
    int k = m % 2;
    if (k == 0) {
        psi = t;
    } else {
        const double h = std::sin(0.5 * kPi * t);
        psi = h * h;  // (1 - cos(pi t)) / 2 without cancellation
    }
    for (k += 2; k <= m; k += 2) {
        const double g =
            std::exp(std::lgamma(0.5 * k) - std::lgamma(0.5 * (k + 1.0))) / (2.0 * kSqrtPi);
        psi -= g * std::pow(st, k - 1.0) * ct;
    }
    return psi;
}

double sidi_psi_hypergeometric(double m, double t) {
    check_sidi_m(m);
    check_unit_interval(t);
    t = std::clamp(t, 0.0, 1.0);
    if (t > 0.5) return 1.0 - sidi_psi_hypergeometric(m, 1.0 - t);
    return sidi_theta_half(m, t) / sidi_theta_total(m);
}

double sidi_psi(double m, double t) {
    check_sidi_m(m);
    check_unit_interval(t);
    t = std::clamp(t, 0.0, 1.0);
    if (t > 0.5) return 1.0 - sidi_psi(m, 1.0 - t);
    if (is_integer(m)) return sidi_psi_recursive(static_cast<int>(std::round(m)), t);
    return sidi_psi_hypergeometric(m, t);
}

double sidi_psi_derivative(double m, double t) {
    check_sidi_m(m);
    check_unit_interval(t);
    t = std::clamp(t, 0.0, 1.0);
    return std::pow(std::max(std::sin(kPi * t), 0.0), m) / sidi_theta_total(m);
}

double sidi_colatitude(double m, double theta) {
    check_theta(theta);
    return kPi * sidi_psi(m, theta / kPi);
}

double sidi_colatitude_derivative(double m, double theta) {
    check_theta(theta);
    return sidi_psi_derivative(m, theta / kPi);
}

double sidi_density(double m, double theta) {
    return std::sin(sidi_colatitude(m, theta)) * sidi_colatitude_derivative(m, theta);
}

double sidi_surface_factor(double m, double theta) {
    check_sidi_m(m);
    check_theta(theta);
    const double s = std::max(std::sin(theta), 0.0);
    // density / sin(theta) = sin(theta_tilde) * sin^(m-1)(theta) / Theta_m(1)
    return std::sin(sidi_colatitude(m, theta)) * std::pow(s, m - 1.0) / sidi_theta_total(m);
}

double grading_density(const TransformSpec& spec, double theta) {
    spec.validate();
    switch (spec.kind) {
        case TransformKind::None:
            check_theta(theta);
            return std::max(std::sin(theta), 0.0);
        case TransformKind::Atkinson:
            return atkinson_density(spec.grading, theta);
        case TransformKind::Sidi:
            return sidi_density(spec.grading, theta);
    }
    return 0.0;
}

double grading_surface_factor(const TransformSpec& spec, double theta) {
    spec.validate();
    switch (spec.kind) {
        case TransformKind::None:
            return 1.0;
        case TransformKind::Atkinson:
            return atkinson_surface_factor(spec.grading, theta);
        case TransformKind::Sidi:
            return sidi_surface_factor(spec.grading, theta);
    }
    return 0.0;
}

UnitPoint colatitude_transform(const TransformSpec& spec, const UnitPoint& p) {
    spec.validate();
    if (spec.kind == TransformKind::None) return p;
    if (spec.kind == TransformKind::Atkinson) return atkinson_map(spec.grading, p);
    const double s = std::hypot(p.x(), p.y());
    if (s == 0.0) return p;
    const double theta = std::acos(std::clamp(p.z(), -1.0, 1.0));
    const double tt = sidi_colatitude(spec.grading, theta);
    const double st = std::sin(tt);
    return UnitPoint::normalized(p.x() / s * st, p.y() / s * st, std::cos(tt));
}

Vec3 ellipsoid_map(const SurfaceEllipsoid& e, const UnitPoint& p) {
    return {e.a * p.x(), e.b * p.y(), e.c * p.z()};
}

double ellipsoid_jacobian(const SurfaceEllipsoid& e, const UnitPoint& p) {
    const double fx = e.b * e.c * p.x();
    const double fy = e.a * e.c * p.y();
    const double fz = e.a * e.b * p.z();
    return std::sqrt(fx * fx + fy * fy + fz * fz);
}

UnitPoint ellipsoid_preimage(const SurfaceEllipsoid& e, const Vec3& surface_point) {
    return UnitPoint::checked(surface_point.x / e.a, surface_point.y / e.b, surface_point.z / e.c);
}

}  // namespace sphquad
