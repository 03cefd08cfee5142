#include "sphquad/singular.hpp"

#include <cmath>
#include <vector>

#include "sphquad/errors.hpp"
#include "sphquad/summation.hpp"

namespace sphquad {

SingularIntegral integrate_singular_detail(const QuadratureRule& rule,
                                           const std::function<double(const Vec3&)>& f,
                                           const TransformSpec& spec, int threads) {
    spec.validate();
    const bool aligned = spec.singular_point.has_value();
    const Rotation rot = aligned ? rotation_to(*spec.singular_point) : Rotation::identity();

    const std::size_t n = rule.size();
    std::vector<double> eff_weight;
    std::vector<Vec3> eval_point;
    std::vector<std::size_t> node_of;
    eff_weight.reserve(n);
    eval_point.reserve(n);
    node_of.reserve(n);

    SingularIntegral out;
    for (std::size_t j = 0; j < n; ++j) {
        const UnitPoint& x = rule.points[j];
        const double factor = grading_surface_factor(spec, to_spherical(x).theta);
        double w = rule.weights[j] * factor;
        if (w == 0.0) {
            ++out.skipped;
            continue;
        }
        UnitPoint moved = colatitude_transform(spec, x);
        if (aligned) {
            moved = rot.apply(moved);
            if (geodesic_distance(moved, *spec.singular_point) < 1e-12) {
                throw SingularHitError("quadrature node landed on the singularity", j);
            }
        }
        Vec3 target = moved.vec();
        if (spec.surface) {
            w *= ellipsoid_jacobian(*spec.surface, moved);
            target = ellipsoid_map(*spec.surface, moved);
        }
        eff_weight.push_back(w);
        eval_point.push_back(target);
        node_of.push_back(j);
    }

    out.evaluations = eff_weight.size();
    out.value = chunked_sum(
        out.evaluations, [&](std::size_t i) { return eff_weight[i] * f(eval_point[i]); },
        threads);

    if (!std::isfinite(out.value)) {
        for (std::size_t i = 0; i < out.evaluations; ++i) {
            if (!std::isfinite(eff_weight[i] * f(eval_point[i]))) {
                throw NonFiniteValueError("integrand value is not finite", node_of[i]);
            }
        }
        throw NonFiniteValueError("node sum overflowed", 0);
    }
    return out;
}

double integrate_singular(const QuadratureRule& rule,
                          const std::function<double(const Vec3&)>& f,
                          const TransformSpec& spec, int threads) {
    return integrate_singular_detail(rule, f, spec, threads).value;
}

}  // namespace sphquad
