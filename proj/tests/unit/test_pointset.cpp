#include <cstdio>
#include <filesystem>
#include <random>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "sphquad/errors.hpp"
#include "sphquad/pointset.hpp"

using namespace sphquad;

TEST_CASE("parser accepts comments, blank lines, and near-unit rows") {
    const PointSet ps = parse_pointset("# header\n0 0 1\n\n  1 0 0  # trailing comment\n"
                                       "0 0 1.000000004\n");
    REQUIRE(ps.size() == 3);
    CHECK(ps[0].z() == 1.0);
    CHECK(ps[1].x() == 1.0);
    CHECK(ps[2].vec().norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("parser rejects malformed rows with 1-based line numbers") {
    try {
        parse_pointset("0 0 1\n0 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }

    CHECK_THROWS_AS(parse_pointset("abc def ghi\n"), ParseError);
    CHECK_THROWS_AS(parse_pointset("0 0 1 9\n"), ParseError);
    CHECK_THROWS_AS(parse_pointset("0 0 1.1\n"), ParseError);  // off the sphere
}

TEST_CASE("format/parse round trip preserves coordinates bitwise") {
    std::mt19937_64 rng(3);
    const PointSet ps = oracles::random_points(rng, 40);
    const PointSet back = parse_pointset(format_pointset(ps));
    REQUIRE(back.size() == ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        CHECK(back[i].x() == ps[i].x());
        CHECK(back[i].y() == ps[i].y());
        CHECK(back[i].z() == ps[i].z());
    }
}

TEST_CASE("save/load round trip records a filename degree claim") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto file = dir / "design_t5_N36.txt";
    PointSet ps = oracles::octahedron();
    ps.set_provenance({"design", 3});
    save_pointset(ps, file);

    const PointSet back = load_pointset(file);
    CHECK(back.size() == 6);
    CHECK(back.provenance().kind == "file");
    CHECK(back.provenance().degree == 5);  // from the file name, not the header
    std::filesystem::remove(file);

    CHECK_THROWS_AS(load_pointset(dir / "no_such_pointset_file.txt"), std::runtime_error);
}

TEST_CASE("degree claims parsed from common file name shapes") {
    CHECK(degree_claim_from_filename("design_t5_N36") == 5);
    CHECK(degree_claim_from_filename("t30") == 30);
    CHECK(degree_claim_from_filename("ss031") == 31);
    CHECK(degree_claim_from_filename("points") == -1);
    CHECK(degree_claim_from_filename("testing") == -1);  // 't' inside a word is not a claim
}

TEST_CASE("unique_points removes coincidences, first occurrence wins") {
    const UnitPoint n = UnitPoint::north_pole();
    const UnitPoint x = UnitPoint::checked(1, 0, 0);
    const PointSet ps({n, n, x, n});
    const PointSet u = unique_points(ps);
    REQUIRE(u.size() == 2);
    CHECK(u[0].z() == 1.0);
    CHECK(u[1].x() == 1.0);
}
