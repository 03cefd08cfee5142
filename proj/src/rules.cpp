#include "sphquad/rules.hpp"

#include <cmath>
#include <stdexcept>

#include "sphquad/errors.hpp"
#include "sphquad/summation.hpp"

namespace sphquad {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kFourPi = 12.566370614359172953850573533118;
}  // namespace

double QuadratureRule::weight_sum() const {
    KahanSum acc;
    for (double w : weights) acc.add(w);
    return acc.value();
}

QuadratureRule trapezoidal_rule(int n, const TransformSpec& grading) {
    if (n < 1) throw std::domain_error("trapezoidal rule requires n >= 1");
    grading.validate();

    const double h = kPi / n;
    const double cell = h * h;
    std::vector<UnitPoint> pts;
    std::vector<double> wts;
    pts.reserve(static_cast<std::size_t>(n + 1) * (2 * n + 1));
    wts.reserve(pts.capacity());

    for (int i = 0; i <= n; ++i) {
        const double theta = i * h;
        const double ci = (i == 0 || i == n) ? 0.5 : 1.0;
        const double mu = grading_density(grading, theta);
        const double tt = (grading.kind == TransformKind::None)
                              ? theta
                              : (grading.kind == TransformKind::Atkinson
                                     ? atkinson_colatitude(grading.grading, theta)
                                     : sidi_colatitude(grading.grading, theta));
        const double st = std::sin(tt), ct = std::cos(tt);
        for (int j = 0; j <= 2 * n; ++j) {
            const double phi = j * h;
            const double cj = (j == 0 || j == 2 * n) ? 0.5 : 1.0;
            pts.push_back(UnitPoint::normalized(st * std::cos(phi), st * std::sin(phi), ct));
            wts.push_back(cell * ci * cj * mu);
        }
    }
    return QuadratureRule{PointSet(std::move(pts), Provenance{"trapezoidal", -1}), std::move(wts),
                          RuleKind::Trapezoidal, n};
}

QuadratureRule equal_area_rule(int N) {
    PointSet centers = equal_area_centers(N);
    std::vector<double> wts(centers.size(), kFourPi / static_cast<double>(N));
    return QuadratureRule{std::move(centers), std::move(wts), RuleKind::EqualArea, N};
}

QuadratureRule design_rule(PointSet points, int t) {
    if (points.empty()) throw std::domain_error("design rule requires a nonempty point set");
    const double w = kFourPi / static_cast<double>(points.size());
    std::vector<double> wts(points.size(), w);
    Provenance prov = points.provenance();
    if (prov.kind == "unknown") prov.kind = "t-design";
    prov.degree = t;
    points.set_provenance(prov);
    return QuadratureRule{std::move(points), std::move(wts), RuleKind::TDesign, t};
}

double integrate(const QuadratureRule& rule,
                 const std::function<double(const UnitPoint&)>& f) {
    if (rule.points.size() != rule.weights.size()) {
        throw std::invalid_argument("rule has mismatched points and weights");
    }
    KahanSum acc;
    for (std::size_t j = 0; j < rule.size(); ++j) {
        const double fv = f(rule.points[j]);
        if (!std::isfinite(fv)) {
            throw NonFiniteValueError("integrand returned non-finite value", j);
        }
        acc.add(rule.weights[j] * fv);
    }
    return acc.value();
}

}  // namespace sphquad
