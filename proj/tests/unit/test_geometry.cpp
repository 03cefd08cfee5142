#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sphquad/designs.hpp"
#include "sphquad/errors.hpp"
#include "sphquad/geometry.hpp"
#include "sphquad/rules.hpp"

using namespace sphquad;

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
}

TEST_CASE("tetrahedron metrics against exact values") {
    const PointSet tet = oracles::tetrahedron();
    const double delta = std::acos(-1.0 / 3.0);

    CHECK(min_angle(tet) == doctest::Approx(delta).epsilon(1e-14));
    // covering radius is attained opposite a vertex
    CHECK(mesh_norm(tet, 200) == doctest::Approx(kPi - delta).epsilon(3e-3));
    CHECK(mesh_ratio(tet, 200) ==
          doctest::Approx(2 * (kPi - delta) / delta).epsilon(3e-3));
    CHECK(mesh_ratio(tet, 200) == doctest::Approx(1.2885).epsilon(3e-3));
}

TEST_CASE("octahedron metrics: face centers are the farthest points") {
    const PointSet oct = oracles::octahedron();
    CHECK(min_angle(oct) == doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(mesh_norm(oct, 200) == doctest::Approx(std::acos(1.0 / std::sqrt(3.0))).epsilon(3e-3));
}

TEST_CASE("antipodal pair: separation pi, covering radius pi/2") {
    const PointSet pair({UnitPoint::north_pole(), UnitPoint::south_pole()});
    CHECK(min_angle(pair) == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(mesh_norm(pair, 300) == doctest::Approx(kPi / 2).epsilon(1e-2));
}

TEST_CASE("mesh norm estimates approach the exact value from below") {
    const PointSet tet = oracles::tetrahedron();
    const double exact = kPi - std::acos(-1.0 / 3.0);
    double prev = 0.0;
    for (int res : {20, 50, 120, 300}) {
        const double h = mesh_norm(tet, res);
        // refinement makes each estimate near-exact; allow noise-level slack
        CHECK(h >= prev - 1e-6);
        CHECK(h <= exact + 1e-12);
        CHECK(h == doctest::Approx(exact).epsilon(1e-4));
        prev = h;
    }
}

TEST_CASE("covering at least half the separation on assorted sets") {
    std::mt19937_64 rng(97);
    const DesignResult d = generate_design(8);
    const PointSet sets[] = {oracles::tetrahedron(), oracles::cube(),
                             equal_area_rule(50).points, d.points,
                             oracles::random_points(rng, 64)};
    for (const PointSet& ps : sets) {
        const GeometryReport g = geometry_report(ps, 150);
        CHECK(g.mesh_norm >= g.min_angle / 2 - 1e-12);
        CHECK(g.mesh_ratio >= 1.0 - 1e-12);
        CHECK(g.mesh_ratio == doctest::Approx(2 * g.mesh_norm / g.min_angle).epsilon(1e-14));
        CHECK(g.resolution == 150);
    }
}

TEST_CASE("well-distributed families keep a modest mesh ratio") {
    for (int N : {100, 400}) {
        CHECK(mesh_ratio(equal_area_rule(N).points, 100) < 4.0);
    }
    const DesignResult d = generate_design(12);
    CHECK(mesh_ratio(d.points, 100) < 4.0);
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(min_angle(PointSet({UnitPoint::north_pole()})), std::domain_error);
    const UnitPoint x = UnitPoint::checked(1, 0, 0);
    CHECK_THROWS_AS(min_angle(PointSet({x, x})), DuplicatePointsError);
    CHECK_THROWS_AS(mesh_norm(PointSet(), 100), std::domain_error);
    CHECK_THROWS_AS(mesh_norm(oracles::tetrahedron(), 0), std::domain_error);
}
