#pragma once

#include <functional>
#include <vector>

#include "sphquad/pointset.hpp"
#include "sphquad/transforms.hpp"

namespace sphquad {

enum class RuleKind { Trapezoidal, EqualArea, TDesign, External };

/// Positive-weight surface quadrature rule: sum_j w_j f(x_j) approximates the
/// surface integral of f. parameter is n (trapezoidal), N (equal-area), or t
/// (design); -1 for external sets.
struct QuadratureRule {
    PointSet points;
    std::vector<double> weights;
    RuleKind kind = RuleKind::External;
    int parameter = -1;

    std::size_t size() const { return points.size(); }
    double weight_sum() const;
};

/// Bivariate trapezoidal rule on the (theta, phi) grid theta_i = i*pi/n
/// (i = 0..n), phi_j = j*pi/n (j = 0..2n), boundary samples halved. Node
/// (i, j) carries weight (pi/n)^2 * c_i * c_j * mu(theta_i) where mu is
/// sin(theta) ungraded or the grading density; graded nodes are moved to the
/// transformed colatitude. Pole and seam duplicates are retained, so
/// N = (n+1)(2n+1).
QuadratureRule trapezoidal_rule(int n, const TransformSpec& grading = {});

/// Recursive zonal equal-area partition (polar caps plus collars of equal
/// cells); nodes are cell midpoints in (theta, phi) and every weight is
/// exactly 4*pi/N. N = 1 is the north pole, N = 2 the two poles.
QuadratureRule equal_area_rule(int N);

/// Cell centers only (candidate grids, optimizer seeds).
PointSet equal_area_centers(int N);

/// Equal-weight rule over a given point set, weights 4*pi/N; t records the
/// claimed design strength and is not verified here.
QuadratureRule design_rule(PointSet points, int t);

/// Compensated, deterministically ordered node sum. Non-finite integrand
/// values raise NonFiniteValueError naming the node.
double integrate(const QuadratureRule& rule,
                 const std::function<double(const UnitPoint&)>& f);

}  // namespace sphquad
