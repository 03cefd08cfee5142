#pragma once

#include <optional>

#include "sphquad/sphere.hpp"

namespace sphquad {

enum class TransformKind { None, Atkinson, Sidi };

struct SurfaceEllipsoid {
    double a = 1.0;
    double b = 1.0;
    double c = 1.0;
};

/// A pole-targeted colatitude transform: the map clusters points toward the
/// poles (fixed points of the map) with strength set by the grading
/// parameter, q for Atkinson (q = 1 is the identity), m for Sidi. The
/// optional singular_point is where the clustered pole is rotated to; the
/// optional surface reinterprets the integral as one over an ellipsoid
/// (singular_point stays a sphere point, the ellipsoid point's preimage).
struct TransformSpec {
    TransformKind kind = TransformKind::None;
    double grading = 1.0;
    std::optional<UnitPoint> singular_point;
    std::optional<SurfaceEllipsoid> surface;

    static TransformSpec none() { return {}; }
    static TransformSpec atkinson(double q) { return {TransformKind::Atkinson, q, {}, {}}; }
    static TransformSpec sidi(double m) { return {TransformKind::Sidi, m, {}, {}}; }

    void validate() const;
};

/// (cos phi sin^q theta, sin phi sin^q theta, cos theta) / normalization.
UnitPoint atkinson_map(double q, const UnitPoint& p);
/// Colatitude of the mapped point; strictly increasing in theta.
double atkinson_colatitude(double q, double theta);
double atkinson_colatitude_inverse(double q, double theta_tilde);
/// Full (theta, phi)-plane density of the mapped area element; equals
/// sin(theta) at q = 1 and integrates to 4*pi over [0,pi]x[0,2*pi).
double atkinson_density(double q, double theta);
/// density / sin(theta), evaluated in closed form so the poles are exact.
double atkinson_surface_factor(double q, double theta);

/// Theta_m(t) = integral of sin^m(pi u) over [0, t], and its normalization
/// psi_m = Theta_m / Theta_m(1). Integer m >= 1 uses the closed recursion;
/// non-integer m >= 1/2 the Gauss hypergeometric series. Both paths are
/// exposed for cross-checking.
double sidi_theta_total(double m);                        // Theta_m(1), Gamma closed form
double sidi_theta(double m, double t);                    // hypergeometric route
double sidi_psi(double m, double t);
double sidi_psi_recursive(int m, double t);
double sidi_psi_hypergeometric(double m, double t);
double sidi_psi_derivative(double m, double t);           // sin^m(pi t) / Theta_m(1)

/// theta_tilde = pi * psi_m(theta / pi), with d theta_tilde / d theta =
/// psi'_m(theta / pi).
double sidi_colatitude(double m, double theta);
double sidi_colatitude_derivative(double m, double theta);
/// sin(theta_tilde) * d theta_tilde / d theta, the (theta, phi)-plane density.
double sidi_density(double m, double theta);
double sidi_surface_factor(double m, double theta);

/// Dispatch over TransformSpec. density: sin(theta) for None. factor:
/// density / sin(theta), 1 for None. The point map moves a node along its
/// meridian to the transformed colatitude.
double grading_density(const TransformSpec& spec, double theta);
double grading_surface_factor(const TransformSpec& spec, double theta);
UnitPoint colatitude_transform(const TransformSpec& spec, const UnitPoint& p);

/// (a x, b y, c z) and the area scale dS_ellipsoid / d omega at p, which is
/// sqrt((bc x)^2 + (ac y)^2 + (ab z)^2); identically 1 for the unit sphere.
Vec3 ellipsoid_map(const SurfaceEllipsoid& e, const UnitPoint& p);
double ellipsoid_jacobian(const SurfaceEllipsoid& e, const UnitPoint& p);
/// Preimage on the sphere of a point of the ellipsoid surface.
UnitPoint ellipsoid_preimage(const SurfaceEllipsoid& e, const Vec3& surface_point);

}  // namespace sphquad
