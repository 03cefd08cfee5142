#include <cmath>
#include <stdexcept>
#include <vector>

#include "sphquad/rules.hpp"

namespace sphquad {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kFourPi = 12.566370614359172953850573533118;

double cap_colatitude(double cells, int N) {
    // colatitude whose cap holds `cells` cells of area 4*pi/N
    return std::acos(std::clamp(1.0 - 2.0 * cells / N, -1.0, 1.0));
}

}  // namespace

PointSet equal_area_centers(int N) {
    if (N < 1) throw std::domain_error("equal-area partition requires N >= 1");
    std::vector<UnitPoint> pts;
    pts.reserve(static_cast<std::size_t>(N));
    const Provenance prov{"equal-area", -1};

    if (N == 1) {
        pts.push_back(UnitPoint::north_pole());
        return PointSet(std::move(pts), prov);
    }
    if (N == 2) {
        pts.push_back(UnitPoint::north_pole());
        pts.push_back(UnitPoint::south_pole());
        return PointSet(std::move(pts), prov);
    }

    const double theta_c = cap_colatitude(1.0, N);
    const double ideal_angle = std::sqrt(kFourPi / N);
    const int n_collars =
        std::max(1, static_cast<int>(std::round((kPi - 2.0 * theta_c) / ideal_angle)));
    const double fitting = (kPi - 2.0 * theta_c) / n_collars;

    // ideal cell counts per collar, rounded with running discrepancy carry
    std::vector<int> cells(n_collars);
    double carry = 0.0;
    int assigned = 0;
    for (int k = 0; k < n_collars; ++k) {
        const double top = theta_c + k * fitting;
        const double bot = theta_c + (k + 1) * fitting;
        const double ideal = (std::cos(top) - std::cos(bot)) * N / 2.0;
        int m = std::max(1, static_cast<int>(std::round(ideal + carry)));
        if (k == n_collars - 1) m = N - 2 - assigned;  // absorb rounding drift
        carry += ideal - m;
        cells[k] = m;
        assigned += m;
    }
    if (cells.back() < 1) {
        throw std::runtime_error("equal-area partition failed to place all cells");
    }

    pts.push_back(UnitPoint::north_pole());
    int before = 1;
    for (int k = 0; k < n_collars; ++k) {
        const int m = cells[k];
        const double top = cap_colatitude(before, N);
        const double bot = cap_colatitude(before + m, N);
        const double theta = 0.5 * (top + bot);
        const double st = std::sin(theta), ct = std::cos(theta);
        const double width = kTwoPi / m;
        const double offset = (k % 2 == 0) ? 0.0 : 0.5 * width;  // stagger adjacent collars
        for (int i = 0; i < m; ++i) {
            double phi = (i + 0.5) * width + offset;
            if (phi >= kTwoPi) phi -= kTwoPi;
            pts.push_back(UnitPoint::normalized(st * std::cos(phi), st * std::sin(phi), ct));
        }
        before += m;
    }
    pts.push_back(UnitPoint::south_pole());

    if (static_cast<int>(pts.size()) != N) {
        throw std::runtime_error("equal-area partition produced wrong cell count");
    }
    return PointSet(std::move(pts), prov);
}

}  // namespace sphquad
