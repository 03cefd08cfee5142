#include "sphquad/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sphquad/errors.hpp"
#include "sphquad/rules.hpp"

namespace sphquad {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

struct ColatitudeIndex {
    std::vector<std::size_t> order;  // point indices sorted by colatitude
    std::vector<double> theta;       // colatitudes in sorted order
    const PointSet* ps;

    explicit ColatitudeIndex(const PointSet& points) : ps(&points) {
        order.resize(points.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::vector<double> th(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            th[i] = std::acos(std::clamp(points[i].z(), -1.0, 1.0));
        }
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return th[a] < th[b]; });
        theta.resize(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) theta[i] = th[order[i]];
    }

    // distance from y to the nearest point of the set; geodesic distance is
    // bounded below by the colatitude gap, which bounds the scan window
    double nearest(const UnitPoint& y) const {
        const double ty = std::acos(std::clamp(y.z(), -1.0, 1.0));
        double best = kPi;
        const auto lo =
            std::lower_bound(theta.begin(), theta.end(), ty) - theta.begin();
        std::ptrdiff_t a = lo - 1, b = lo;
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(theta.size());
        while (a >= 0 || b < n) {
            const double da = (a >= 0) ? ty - theta[a] : kPi + 1.0;
            const double db = (b < n) ? theta[b] - ty : kPi + 1.0;
            if (std::min(da, db) >= best) break;
            if (da <= db) {
                best = std::min(best, geodesic_distance(y, (*ps)[order[a]]));
                --a;
            } else {
                best = std::min(best, geodesic_distance(y, (*ps)[order[b]]));
                ++b;
            }
        }
        return best;
    }
};

struct Frame {
    Vec3 u, v;
};

Frame tangent_frame(const UnitPoint& p) {
    const Vec3 x = p.vec();
    const Vec3 axis = (std::abs(x.z) < 0.9) ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    Vec3 u = axis.cross(x);
    u = (1.0 / u.norm()) * u;
    return {u, x.cross(u)};
}

}  // namespace

double min_angle(const PointSet& ps) {
    if (ps.size() < 2) throw std::domain_error("min_angle requires at least two points");
    const ColatitudeIndex index(ps);
    double best = kPi;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i + 1 < index.order.size(); ++i) {
        for (std::size_t j = i + 1; j < index.order.size(); ++j) {
            if (index.theta[j] - index.theta[i] >= best) break;
            const double d =
                geodesic_distance((*index.ps)[index.order[i]], (*index.ps)[index.order[j]]);
            if (d < best) {
                best = d;
                bi = index.order[i];
                bj = index.order[j];
            }
        }
    }
    if (best < 1e-14) {
        throw DuplicatePointsError("coincident points in point set", std::min(bi, bj),
                                   std::max(bi, bj));
    }
    return best;
}

double mesh_norm(const PointSet& ps, int resolution) {
    if (ps.empty()) throw std::domain_error("mesh_norm requires a nonempty point set");
    if (resolution < 1) throw std::domain_error("mesh_norm resolution must be >= 1");
    const ColatitudeIndex index(ps);

    const PointSet candidates =
        equal_area_centers(resolution * resolution);
    UnitPoint best_pt = candidates[0];
    double best = -1.0;
    for (const UnitPoint& c : candidates) {
        const double d = index.nearest(c);
        if (d > best) {
            best = d;
            best_pt = c;
        }
    }

    // shrinking 9x9 tangent-grid refinement around the running maximizer
    double radius = 4.0 / resolution;
    while (radius > 1e-9) {
        const Frame f = tangent_frame(best_pt);
        UnitPoint round_best = best_pt;
        double round_val = best;
        for (int a = -4; a <= 4; ++a) {
            for (int b = -4; b <= 4; ++b) {
                if (a == 0 && b == 0) continue;
                const Vec3 step = (radius * a / 4.0) * f.u + (radius * b / 4.0) * f.v;
                const UnitPoint y = UnitPoint::normalized(best_pt.vec() + step);
                const double d = index.nearest(y);
                if (d > round_val) {
                    round_val = d;
                    round_best = y;
                }
            }
        }
        best = round_val;
        best_pt = round_best;
        radius /= 4.0;
    }
    return best;
}

double mesh_ratio(const PointSet& ps, int resolution) {
    return 2.0 * mesh_norm(ps, resolution) / min_angle(ps);
}

GeometryReport geometry_report(const PointSet& ps, int resolution) {
    GeometryReport report;
    report.mesh_norm = mesh_norm(ps, resolution);
    report.min_angle = min_angle(ps);
    report.mesh_ratio = 2.0 * report.mesh_norm / report.min_angle;
    report.resolution = resolution;
    return report;
}

}  // namespace sphquad
