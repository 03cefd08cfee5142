#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sphquad/designs.hpp"
#include "sphquad/harmonics.hpp"
#include "sphquad/sphere.hpp"
#include "sphquad/wce.hpp"

using namespace sphquad;

namespace {

// direct transcription of the assembled formulas, no shared code with wce()
double wce_reference(const PointSet& ps, double s) {
    const std::size_t n = ps.size();
    const double V = std::pow(2.0, 2 * s - 2) / s;
    const int L = static_cast<int>(std::floor(s - 1.0));
    const double parity = (L % 2 == 0) ? -1.0 : 1.0;  // (-1)^(L+1)

    double pair_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double z = std::min(1.0, std::max(-1.0, ps[i].dot(ps[j])));
            const double chord = i == j ? 0.0 : std::pow(std::max(2.0 - 2.0 * z, 0.0), s - 1.0);
            if (s < 2.0) {
                pair_sum += chord;
            } else {
                double q = 0.0;
                for (int ell = 1; ell <= L; ++ell) {
                    const double sign = (((L + 1 - ell) % 2 == 0) ? 1.0 : -1.0) - 1.0;
                    double alpha = V * parity;
                    for (int r = 0; r < ell; ++r) {
                        alpha *= (1.0 - s + r) / (1.0 + s + r);
                    }
                    q += sign * alpha * (2 * ell + 1) * legendre_p(ell, z);
                }
                pair_sum += q + parity * chord;
            }
        }
    }
    const double mean = pair_sum / (static_cast<double>(n) * static_cast<double>(n));
    const double square = s < 2.0 ? V - mean : mean - parity * V;
    return std::sqrt(std::max(square, 0.0));
}

}  // namespace

TEST_CASE("Sobolev order validation") {
    CHECK_THROWS_AS(validate_sobolev_order(1.0), std::domain_error);
    CHECK_THROWS_AS(validate_sobolev_order(0.5), std::domain_error);
    CHECK_THROWS_AS(validate_sobolev_order(2.0), std::domain_error);
    CHECK_NOTHROW(validate_sobolev_order(1.5));
    CHECK_NOTHROW(validate_sobolev_order(4.5));

    CHECK(wce_smoothing_order(1.5) == 0);
    CHECK(wce_smoothing_order(2.5) == 1);
    CHECK(wce_smoothing_order(3.5) == 2);
    CHECK(wce_smoothing_order(4.0) == 3);
}

TEST_CASE("normalization constant through both routes") {
    CHECK(v_const(1.5) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(v_const(2.5) == doctest::Approx(3.2).epsilon(1e-15));
    for (double s : {1.5, 2.5, 3.5, 4.5, 5.25}) {
        CHECK(v_const(s) == doctest::Approx(v_const_gamma(s)).epsilon(1e-13));
    }
}

TEST_CASE("alpha coefficients: worked value and Pochhammer/Gamma agreement") {
    // s = 2.5, ell = 1: (-1)^2 * (1-s)/(1+s) * V = -1.5/3.5 * 3.2 = -48/35
    CHECK(alpha_coeff(2.5, 1) == doctest::Approx(-48.0 / 35.0).epsilon(1e-14));
    for (double s : {1.5, 2.5, 3.5, 4.5}) {
        for (int ell = 0; ell <= 50; ++ell) {
            const double a = alpha_coeff(s, ell);
            const double b = alpha_coeff_gamma(s, ell);
            CHECK(a == doctest::Approx(b).epsilon(1e-12));
        }
    }
}

TEST_CASE("pair kernel worked values") {
    CHECK(wce_pair_kernel(-1.0, 1.5) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(wce_pair_kernel(1.0, 1.5) == 0.0);
    // Q_1(1) = 288/35 at s = 2.5, zero chord term at z = 1
    CHECK(wce_pair_kernel(1.0, 2.5) == doctest::Approx(288.0 / 35.0).epsilon(1e-14));
}

TEST_CASE("closed-form worst-case errors for one and two points") {
    const PointSet single({UnitPoint::north_pole()});
    CHECK(wce(single, 1.5) == doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-13));

    const PointSet pair({UnitPoint::north_pole(), UnitPoint::south_pole()});
    CHECK(wce(pair, 1.5) == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-13));
}

TEST_CASE("library agrees with a direct transcription on random sets") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 3; ++trial) {
        const PointSet ps = oracles::random_points(rng, 20);
        for (double s : {1.5, 2.5, 3.5}) {
            CHECK(wce(ps, s) == doctest::Approx(wce_reference(ps, s)).epsilon(1e-12));
        }
    }
}

TEST_CASE("worst-case error is rotation invariant and thread-count stable") {
    std::mt19937_64 rng(89);
    const PointSet ps = oracles::random_points(rng, 30);
    const Rotation rot = Rotation::about_z(0.7) * Rotation::about_y(1.1);
    std::vector<UnitPoint> moved;
    for (const UnitPoint& p : ps) moved.push_back(rot.apply(p));
    const PointSet rotated(std::move(moved));

    for (double s : {1.5, 3.5}) {
        CHECK(wce(ps, s) == doctest::Approx(wce(rotated, s)).epsilon(1e-12));
        CHECK(wce(ps, s, 4) == wce(ps, s, 1));
    }
}

TEST_CASE("worst-case error decreases along the design ladder") {
    double prev = 1e9;
    for (int t : {4, 8, 12}) {
        const DesignResult d = generate_design(t);
        REQUIRE(d.converged);
        const double e = wce(d.points, 1.5);
        CHECK(e < prev);
        CHECK(e > 0.0);
        prev = e;
    }
}
