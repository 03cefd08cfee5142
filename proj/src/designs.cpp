#include "sphquad/designs.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <stdexcept>

#include "sphquad/harmonics.hpp"
#include "sphquad/rules.hpp"
#include "sphquad/summation.hpp"

namespace sphquad {

namespace {

constexpr double kFourPi = 12.566370614359172953850573533118;

void check_eval_degree(int t) {
    if (t < 1 || t > 200) throw std::domain_error("degree t must be in [1, 200]");
}

// sums of every basis function over the point set, compensated per component
std::vector<double> basis_column_sums(const PointSet& ps, int t) {
    const HarmonicBasis basis{t};
    const int d = basis.dimension();
    std::vector<KahanSum> acc(d);
    std::vector<double> vals(d);
    for (const UnitPoint& p : ps) {
        eval_harmonics(basis, p, vals.data());
        for (int i = 0; i < d; ++i) acc[i].add(vals[i]);
    }
    std::vector<double> sums(d);
    for (int i = 0; i < d; ++i) sums[i] = acc[i].value();
    return sums;
}

}  // namespace

double a_nt(const PointSet& ps, int t) {
    check_eval_degree(t);
    if (ps.empty()) throw std::domain_error("a_nt requires a nonempty point set");
    const double n = static_cast<double>(ps.size());
    const std::vector<double> sums = basis_column_sums(ps, t);
    KahanSum acc;
    for (std::size_t i = 1; i < sums.size(); ++i) acc.add(sums[i] * sums[i]);
    return kFourPi / (n * n) * acc.value();
}

double a_nt_kernel(const PointSet& ps, int t, int threads) {
    check_eval_degree(t);
    if (ps.empty()) throw std::domain_error("a_nt requires a nonempty point set");
    const std::size_t n = ps.size();
    const double row_scale = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
    const double total = chunked_sum(
        n,
        [&](std::size_t i) {
            KahanSum row;
            for (std::size_t j = 0; j < n; ++j) {
                const double z = std::clamp(ps[i].dot(ps[j]), -1.0, 1.0);
                // K(z) = sum_{ell=1..t} (2 ell + 1) P_ell(z)
                double pm2 = 1.0, pm1 = z, k = 3.0 * z;
                for (int l = 2; l <= t; ++l) {
                    const double p = ((2 * l - 1) * z * pm1 - (l - 1) * pm2) / l;
                    k += (2 * l + 1) * p;
                    pm2 = pm1;
                    pm1 = p;
                }
                row.add(k);
            }
            return row.value();
        },
        threads);
    return row_scale * total;
}

std::vector<Vec3> a_nt_gradient(const PointSet& ps, int t) {
    check_eval_degree(t);
    const std::size_t n = ps.size();
    const double scale = 2.0 / (static_cast<double>(n) * static_cast<double>(n));
    std::vector<Vec3> grad(n);
    for (std::size_t i = 0; i < n; ++i) {
        KahanSum gx, gy, gz;
        for (std::size_t j = 0; j < n; ++j) {
            const double z = std::clamp(ps[i].dot(ps[j]), -1.0, 1.0);
            // K'(z) via P'_{l} = P'_{l-2} + (2l-1) P_{l-1}
            double pm2 = 1.0, pm1 = z;
            double dm2 = 0.0, dm1 = 1.0;
            double kp = 3.0;
            for (int l = 2; l <= t; ++l) {
                const double p = ((2 * l - 1) * z * pm1 - (l - 1) * pm2) / l;
                const double dp = dm2 + (2 * l - 1) * pm1;
                kp += (2 * l + 1) * dp;
                pm2 = pm1;
                pm1 = p;
                dm2 = dm1;
                dm1 = dp;
            }
            gx.add(kp * ps[j].x());
            gy.add(kp * ps[j].y());
            gz.add(kp * ps[j].z());
        }
        Vec3 g{scale * gx.value(), scale * gy.value(), scale * gz.value()};
        const Vec3 x = ps[i].vec();
        grad[i] = g - g.dot(x) * x;  // tangent-plane projection
    }
    return grad;
}

int design_lower_bound(int t) {
    if (t < 0) throw std::domain_error("degree t must be nonnegative");
    if (t % 2 == 1) return (t + 1) * (t + 3) / 4;
    return (t + 2) * (t + 2) / 4;
}

namespace {

struct TangentFrame {
    Vec3 u, v;
};

TangentFrame frame_at(const UnitPoint& p) {
    const Vec3 x = p.vec();
    const Vec3 axis = (std::abs(x.z) < 0.9) ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    Vec3 u = axis.cross(x);
    const double un = u.norm();
    u = (1.0 / un) * u;
    return {u, x.cross(u)};
}

Eigen::VectorXd residual_vector(const std::vector<UnitPoint>& pts, int t) {
    const HarmonicBasis basis{t};
    const int d = basis.dimension();
    std::vector<KahanSum> acc(d);
    std::vector<double> vals(d);
    for (const UnitPoint& p : pts) {
        eval_harmonics(basis, p, vals.data());
        for (int i = 0; i < d; ++i) acc[i].add(vals[i]);
    }
    const double scale = std::sqrt(kFourPi) / static_cast<double>(pts.size());
    Eigen::VectorXd r(d - 1);
    for (int i = 1; i < d; ++i) r(i - 1) = scale * acc[i].value();
    return r;
}

void fill_jacobian(const std::vector<UnitPoint>& pts, const std::vector<TangentFrame>& frames,
                   int t, Eigen::MatrixXd& jac) {
    const HarmonicBasis basis{t};
    const int d = basis.dimension();
    const double scale = std::sqrt(kFourPi) / static_cast<double>(pts.size());
    std::vector<double> vals(d);
    std::vector<Vec3> grads(d);
    for (std::size_t j = 0; j < pts.size(); ++j) {
        eval_harmonics_gradient(basis, pts[j], vals.data(), grads.data());
        const Eigen::Index cu = 2 * static_cast<Eigen::Index>(j);
        for (int i = 1; i < d; ++i) {
            jac(i - 1, cu) = scale * grads[i].dot(frames[j].u);
            jac(i - 1, cu + 1) = scale * grads[i].dot(frames[j].v);
        }
    }
}

}  // namespace

DesignResult generate_design(int t, int N, const DesignOptions& opts) {
    if (t < 1 || t > 30) throw std::domain_error("design generation requires 1 <= t <= 30");
    if (N < 0) N = (t + 1) * (t + 1);
    if (N < design_lower_bound(t)) {
        throw std::domain_error("N below the design lower bound for this degree");
    }

    // equal-area start with small tangent jitter to break the partition's
    // symmetries, deterministic in (t, N, seed). A fixed global rotation
    // keeps the partition's polar cap centers away from the poles, where the
    // grading transforms pile nodes onto a rotated singularity.
    std::vector<UnitPoint> pts = equal_area_centers(N).points();
    const Rotation tilt = Rotation::about_z(0.31830988618379069) *
                          Rotation::about_y(0.61547970867038737);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (static_cast<std::uint64_t>(t) << 32) ^
                        (static_cast<std::uint64_t>(N) << 8) ^ opts.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (UnitPoint& p : pts) {
        p = tilt.apply(p);
        const TangentFrame f = frame_at(p);
        const Vec3 step = 1e-3 * (gauss(rng) * f.u + gauss(rng) * f.v);
        p = UnitPoint::normalized(p.vec() + step);
    }

    const int d = (t + 1) * (t + 1);
    Eigen::VectorXd r = residual_vector(pts, t);
    double a_cur = r.squaredNorm();
    Eigen::MatrixXd jac(d - 1, 2 * static_cast<Eigen::Index>(N));
    Eigen::MatrixXd normal(d - 1, d - 1);

    constexpr double kFloor = 1e-28;
    double lambda = 1e-3;
    int iter = 0;
    for (; iter < opts.max_iterations && a_cur > kFloor; ++iter) {
        std::vector<TangentFrame> frames(pts.size());
        for (std::size_t j = 0; j < pts.size(); ++j) frames[j] = frame_at(pts[j]);
        fill_jacobian(pts, frames, t, jac);
        normal.setZero();
        normal.selfadjointView<Eigen::Lower>().rankUpdate(jac);

        bool accepted = false;
        for (int tries = 0; tries < 60; ++tries) {
            Eigen::MatrixXd damped = normal;
            damped.diagonal().array() += lambda;
            Eigen::LLT<Eigen::MatrixXd> llt(damped.selfadjointView<Eigen::Lower>());
            if (llt.info() != Eigen::Success) {
                lambda *= 4.0;
                continue;
            }
            const Eigen::VectorXd y = llt.solve(-r);
            const Eigen::VectorXd delta = jac.transpose() * y;

            std::vector<UnitPoint> trial(pts.size());
            for (std::size_t j = 0; j < pts.size(); ++j) {
                const Eigen::Index c = 2 * static_cast<Eigen::Index>(j);
                trial[j] = UnitPoint::normalized(pts[j].vec() + delta(c) * frames[j].u +
                                                 delta(c + 1) * frames[j].v);
            }
            const Eigen::VectorXd r_trial = residual_vector(trial, t);
            const double a_trial = r_trial.squaredNorm();
            if (a_trial < a_cur) {
                pts = std::move(trial);
                r = r_trial;
                a_cur = a_trial;
                lambda = std::max(lambda / 3.0, 1e-14);
                accepted = true;
                break;
            }
            lambda *= 4.0;
            if (lambda > 1e14) break;
        }
        if (!accepted) break;  // stalled
    }

    DesignResult result;
    result.degree = t;
    result.residual = a_cur;
    result.iterations = iter;
    result.converged = a_cur <= opts.tolerance;
    result.points = PointSet(std::move(pts), Provenance{"t-design", t});
    return result;
}

VerifyReport verify_design(const PointSet& ps, int t, double tol) {
    check_eval_degree(t);
    if (ps.empty()) throw std::domain_error("verify requires a nonempty point set");
    VerifyReport report;
    report.residual = a_nt(ps, t);

    const HarmonicBasis basis{t};
    const int d = basis.dimension();
    const std::vector<double> sums = basis_column_sums(ps, t);
    const double n = static_cast<double>(ps.size());

    // 20 random unit-norm coefficient vectors; the equal-weight average of
    // p = sum c_i Y_i must match its mean value c_0 / sqrt(4 pi)
    std::mt19937_64 rng(0x5bf03635u);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::VectorXd c(d);
        for (int i = 0; i < d; ++i) c(i) = gauss(rng);
        c.normalize();
        KahanSum avg;  // (1/N) sum_j p(x_j) = (1/N) sum_i c_i * colsum_i
        for (int i = 0; i < d; ++i) avg.add(c(i) * sums[i] / n);
        const double exact_mean = c(0) / std::sqrt(kFourPi);
        worst = std::max(worst, std::abs(avg.value() - exact_mean));
    }
    report.max_poly_error = worst;
    report.ok = report.residual <= tol && worst <= 10.0 * tol;
    return report;
}

GramReport gram_logdet(const PointSet& ps, int t) {
    check_eval_degree(t);
    const Eigen::MatrixXd y = basis_matrix(HarmonicBasis{t}, ps);
    const Eigen::Index n = y.cols();
    const Eigen::MatrixXd gram = y.transpose() * y;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    if (eig.info() != Eigen::Success) throw std::runtime_error("Gram eigendecomposition failed");

    const Eigen::VectorXd& ev = eig.eigenvalues();
    const double largest = ev(n - 1);
    const double cutoff = 1e-14 * std::max(largest, 0.0);
    GramReport report;
    KahanSum logsum;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (ev(i) > cutoff && ev(i) > 0.0) {
            logsum.add(std::log(ev(i)));
            ++report.rank;
        }
    }
    report.log_det = logsum.value();
    const bool square = (n == static_cast<Eigen::Index>((t + 1) * (t + 1)));
    report.singular = square && ev(0) < cutoff;
    return report;
}

double constraint_norm(const PointSet& ps, int t) {
    check_eval_degree(t);
    const Eigen::MatrixXd y = basis_matrix(HarmonicBasis{t}, ps);
    const Eigen::VectorXd u = y * Eigen::VectorXd::Ones(y.cols());
    const Eigen::VectorXd rowsum = y.transpose() * u;  // G * e without forming G
    double norm = 0.0;
    for (Eigen::Index i = 1; i < rowsum.size(); ++i) {
        norm = std::max(norm, std::abs(rowsum(0) - rowsum(i)));
    }
    return norm;
}

}  // namespace sphquad
