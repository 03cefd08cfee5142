#pragma once

#include <cstddef>
#include <functional>

#include "sphquad/rules.hpp"
#include "sphquad/transforms.hpp"

namespace sphquad {

struct SingularIntegral {
    double value = 0.0;
    std::size_t evaluations = 0;  // nodes that contributed
    std::size_t skipped = 0;      // zero-weight nodes, never evaluated
};

/// Composed quadrature Q = sum_j w_j factor(theta_j) J_M(R T(x_j)) f(M(R T(x_j))):
/// T is the grading map of spec (clusters nodes at the poles, identity for
/// None), factor its surface density ratio at the original node, R the
/// rotation carrying the north pole to spec.singular_point (identity when
/// unset), and M / J_M the ellipsoid map and area scale when spec.surface is
/// set (f then takes ellipsoid points). Zero-weight nodes are skipped before
/// any evaluation, so pole nodes of a graded rule never touch the integrand.
/// Raises SingularHitError when a contributing node lands within 1e-12
/// geodesic of the singular point, NonFiniteValueError on bad values.
SingularIntegral integrate_singular_detail(const QuadratureRule& rule,
                                           const std::function<double(const Vec3&)>& f,
                                           const TransformSpec& spec, int threads = 1);

double integrate_singular(const QuadratureRule& rule,
                          const std::function<double(const Vec3&)>& f,
                          const TransformSpec& spec, int threads = 1);

}  // namespace sphquad
