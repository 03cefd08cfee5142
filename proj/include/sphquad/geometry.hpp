#pragma once

#include "sphquad/pointset.hpp"

namespace sphquad {

/// Separation: the smallest pairwise geodesic distance. Pairs closer than
/// 1e-14 raise DuplicatePointsError. Computed with a colatitude-sorted sweep
/// (exact; the |theta_i - theta_j| lower bound prunes far pairs).
double min_angle(const PointSet& ps);

/// Covering radius: the largest geodesic distance from any sphere point to
/// the set, maximized over an equal-area candidate grid of resolution^2
/// points followed by shrinking tangent-grid refinement around the best
/// candidate. A lower bound that increases with resolution.
double mesh_norm(const PointSet& ps, int resolution = 200);

/// rho = 2 * mesh_norm / min_angle >= 1.
double mesh_ratio(const PointSet& ps, int resolution = 200);

struct GeometryReport {
    double mesh_norm = 0.0;
    double min_angle = 0.0;
    double mesh_ratio = 0.0;
    int resolution = 0;
};

GeometryReport geometry_report(const PointSet& ps, int resolution = 200);

}  // namespace sphquad
