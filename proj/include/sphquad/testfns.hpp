#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sphquad/sphere.hpp"
#include "sphquad/transforms.hpp"

namespace sphquad {

/// A benchmark integrand together with its reference integral. eval takes a
/// point of the integration surface (the sphere, or the ellipsoid when
/// surface is set); singular integrands return Inf at their singular point.
struct TestFunction {
    std::string id;
    std::string description;
    double exact = 0.0;
    std::function<double(const Vec3&)> eval;
    std::optional<Vec3> singular_point;
    std::optional<SurfaceEllipsoid> surface;
};

/// The six reference integrands f1..f6.
const std::vector<TestFunction>& all_test_functions();
const TestFunction& test_function(const std::string& id);

/// Cosine cap h0 * cos^2(pi r / (2R)) inside geodesic radius R of center,
/// zero outside; f4 is the (0,0,1), R = 1/3, h0 = 1 instance.
TestFunction cap_function(const Vec3& center, double radius, double height);

}  // namespace sphquad
