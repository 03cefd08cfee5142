#include "sphquad/testfns.hpp"

#include <cmath>
#include <stdexcept>

namespace sphquad {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

double franke(const Vec3& p) {
    const double x = p.x, y = p.y, z = p.z;
    double v = 0.75 * std::exp(-(9 * x - 2) * (9 * x - 2) / 4.0 - (9 * y - 2) * (9 * y - 2) / 4.0 -
                               (9 * z - 2) * (9 * z - 2) / 4.0);
    // the second hump decays linearly in y and z, as in Renka's adaptation
    v += 0.75 * std::exp(-(9 * x + 1) * (9 * x + 1) / 49.0 - (9 * y + 1) / 10.0 -
                         (9 * z + 1) / 10.0);
    v += 0.5 * std::exp(-(9 * x - 7) * (9 * x - 7) / 4.0 - (9 * y - 3) * (9 * y - 3) / 4.0 -
                        (9 * z - 5) * (9 * z - 5) / 4.0);
    v -= 0.2 * std::exp(-(9 * x - 4) * (9 * x - 4) - (9 * y - 7) * (9 * y - 7) -
                        (9 * z - 5) * (9 * z - 5));
    return v;
}

double ridge(const Vec3& p) {
    const double t = std::sin(1.0 + std::abs(p.x) + std::abs(p.y) + std::abs(p.z));
    return t * t / 10.0;
}

double near_singular(const Vec3& p) { return 1.0 / (101.0 - 100.0 * p.z); }

double inverse_distance(const Vec3& p, const Vec3& pole, double rate) {
    const Vec3 d{p.x - pole.x, p.y - pole.y, p.z - pole.z};
    return std::exp(rate * (p.x + 2.0 * p.y + 3.0 * p.z)) / d.norm();
}

std::vector<TestFunction> build_table() {
    std::vector<TestFunction> fns;

    fns.push_back({"f1", "Franke blend of four exponential humps (analytic)",
                   6.6961822200736179523, franke, std::nullopt, std::nullopt});
    fns.push_back({"f2", "sin^2(1 + |x| + |y| + |z|)/10, C0 ridge along coordinate zeros",
                   0.45655373989, ridge, std::nullopt, std::nullopt});
    fns.push_back({"f3", "1/(101 - 100 z), pole at (0, 0, 1.01) off the surface",
                   kPi * std::log(201.0) / 50.0, near_singular, std::nullopt, std::nullopt});
    fns.push_back(cap_function({0.0, 0.0, 1.0}, 1.0 / 3.0, 1.0));

    const Vec3 south{0.0, 0.0, -1.0};
    fns.push_back({"f5", "exp(x + 2y + 3z) / |x - x0|, singular at the south pole",
                   40.90220018862976, [south](const Vec3& p) { return inverse_distance(p, south, 1.0); },
                   south, std::nullopt});

    const SurfaceEllipsoid ell{1.0, 2.0, 3.0};
    const Vec3 sing{0.5, 1.0, 3.0 * std::sqrt(2.0) / 2.0};
    fns.push_back({"f6",
                   "exp(0.1 (x + 2y + 3z)) / |x - x0| on the (1, 2, 3) ellipsoid",
                   371.453416333927,
                   [sing](const Vec3& p) { return inverse_distance(p, sing, 0.1); }, sing, ell});
    return fns;
}

}  // namespace

TestFunction cap_function(const Vec3& center, double radius, double height) {
    if (!(radius > 0.0 && radius <= kPi)) {
        throw std::domain_error("cap radius must lie in (0, pi]");
    }
    const UnitPoint c = UnitPoint::checked(center);
    TestFunction fn;
    fn.id = "f4";
    fn.description = "cosine cap, C1 at the edge";
    // 2*pi*h0 * int_0^R cos^2(pi r / 2R) sin r dr, in closed form via product-to-sum;
    // at R = pi the second term is a removable 0/0 with limit 0
    const double a = kPi / radius;
    const double tail = (a == 1.0) ? 0.0 : (1.0 + std::cos(radius)) / (1.0 - a * a);
    fn.exact = kPi * height * ((1.0 - std::cos(radius)) + tail);
    fn.eval = [c, radius, height](const Vec3& p) {
        const double r = geodesic_distance(UnitPoint::checked(p), c);
        if (r >= radius) return 0.0;
        const double w = std::cos(0.5 * kPi * r / radius);
        return height * w * w;
    };
    return fn;
}

const std::vector<TestFunction>& all_test_functions() {
    static const std::vector<TestFunction> table = build_table();
    return table;
}

const TestFunction& test_function(const std::string& id) {
    for (const TestFunction& fn : all_test_functions()) {
        if (fn.id == id) return fn;
    }
    throw std::invalid_argument("unknown test function: " + id);
}

}  // namespace sphquad
