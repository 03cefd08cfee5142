#include "sphquad/harmonics.hpp"

#include <cmath>
#include <stdexcept>

namespace sphquad {

namespace {

constexpr double kFourPi = 12.566370614359172953850573533118;

double clamp_argument(double x) {
    if (std::abs(x) > 1.0 + 1e-12) {
        throw std::domain_error("Legendre argument outside [-1, 1]");
    }
    return std::clamp(x, -1.0, 1.0);
}

}  // namespace

double legendre_p(int ell, double x) {
    if (ell < 0) throw std::domain_error("Legendre degree must be nonnegative");
    x = clamp_argument(x);
    double pm2 = 1.0, pm1 = x;
    if (ell == 0) return pm2;
    if (ell == 1) return pm1;
    for (int l = 2; l <= ell; ++l) {
        const double p = ((2 * l - 1) * x * pm1 - (l - 1) * pm2) / l;
        pm2 = pm1;
        pm1 = p;
    }
    return pm1;
}

void legendre_p_all(int max_ell, double x, double* out) {
    if (max_ell < 0) throw std::domain_error("Legendre degree must be nonnegative");
    x = clamp_argument(x);
    out[0] = 1.0;
    if (max_ell == 0) return;
    out[1] = x;
    for (int l = 2; l <= max_ell; ++l) {
        out[l] = ((2 * l - 1) * x * out[l - 1] - (l - 1) * out[l - 2]) / l;
    }
}

double legendre_p_derivative(int ell, double x) {
    if (ell < 0) throw std::domain_error("Legendre degree must be nonnegative");
    x = clamp_argument(x);
    if (ell == 0) return 0.0;
    const double omx2 = 1.0 - x * x;
    if (omx2 < 1e-12) {
        // limit at the endpoints: P'_ell(+-1) = (+-1)^(ell-1) * ell(ell+1)/2
        const double sign = (x > 0.0 || ell % 2 == 1) ? 1.0 : -1.0;
        return sign * 0.5 * ell * (ell + 1);
    }
    return ell * (legendre_p(ell - 1, x) - x * legendre_p(ell, x)) / omx2;
}

namespace {

// Shared upward recurrence over (ell, m) for the orthonormal associated
// Legendre functions. Emit receives (ell, m, P, dP/dtheta, P/sin(theta));
// the ratio channel carries P/sin(theta) analytically (finite at the poles),
// valid for m >= 1.
template <class Emit>
void assoc_legendre_sweep(int t, double z, double s, const Emit& emit) {
    double sect_p = 1.0 / std::sqrt(kFourPi);  // Pbar_{mm}
    double sect_d = 0.0;                       // d Pbar_{mm} / d theta
    double sect_u = 0.0;                       // Pbar_{mm} / sin(theta)

    for (int m = 0; m <= t; ++m) {
        if (m >= 1) {
            const double c = std::sqrt((2.0 * m + 1.0) / (2.0 * m));
            const double new_p = c * s * sect_p;
            const double new_d = c * (z * sect_p + s * sect_d);
            const double new_u = (m == 1) ? c * sect_p : c * s * sect_u;
            sect_p = new_p;
            sect_d = new_d;
            sect_u = new_u;
        }
        double pm2 = sect_p, dm2 = sect_d, um2 = sect_u;
        emit(m, m, pm2, dm2, um2);
        if (m + 1 > t) break;

        const double f = std::sqrt(2.0 * m + 3.0);
        double pm1 = f * z * pm2;
        double dm1 = f * (-s * pm2 + z * dm2);
        double um1 = f * z * um2;
        emit(m + 1, m, pm1, dm1, um1);

        for (int l = m + 2; l <= t; ++l) {
            const double a =
                std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l - m) * (l + m)));
            const double b = std::sqrt((2.0 * l + 1.0) * (l + m - 1.0) * (l - m - 1.0) /
                                       ((2.0 * l - 3.0) * (l - m) * (l + m)));
            const double p = a * z * pm1 - b * pm2;
            const double d = a * (-s * pm1 + z * dm1) - b * dm2;
            const double u = a * z * um1 - b * um2;
            emit(l, m, p, d, u);
            pm2 = pm1;
            dm2 = dm1;
            um2 = um1;
            pm1 = p;
            dm1 = d;
            um1 = u;
        }
    }
}

struct Azimuth {
    double cphi = 1.0, sphi = 0.0;  // cos/sin of phi, canonical 0 at poles
    std::vector<double> cm, sm;     // cos(m phi), sin(m phi)

    Azimuth(const UnitPoint& p, double s, int t) : cm(t + 1), sm(t + 1) {
        if (s > 0.0) {
            cphi = p.x() / s;
            sphi = p.y() / s;
        }
        cm[0] = 1.0;
        sm[0] = 0.0;
        for (int m = 1; m <= t; ++m) {
            cm[m] = cphi * cm[m - 1] - sphi * sm[m - 1];
            sm[m] = sphi * cm[m - 1] + cphi * sm[m - 1];
        }
    }
};

constexpr double kSqrt2 = 1.4142135623730950488016887242097;

}  // namespace

void eval_harmonics(const HarmonicBasis& basis, const UnitPoint& p, double* values) {
    const int t = basis.degree;
    const double z = p.z();
    const double s = std::hypot(p.x(), p.y());
    const Azimuth az(p, s, t);

    assoc_legendre_sweep(t, z, s, [&](int l, int m, double pv, double, double) {
        if (m == 0) {
            values[HarmonicBasis::index(l, 1)] = pv;
        } else {
            values[HarmonicBasis::index(l, 2 * m)] = kSqrt2 * pv * az.cm[m];
            values[HarmonicBasis::index(l, 2 * m + 1)] = kSqrt2 * pv * az.sm[m];
        }
    });
}

std::vector<double> eval_harmonics(const HarmonicBasis& basis, const UnitPoint& p) {
    std::vector<double> values(basis.dimension());
    eval_harmonics(basis, p, values.data());
    return values;
}

void eval_harmonics_gradient(const HarmonicBasis& basis, const UnitPoint& p, double* values,
                             Vec3* gradients) {
    const int t = basis.degree;
    const double z = p.z();
    const double s = std::hypot(p.x(), p.y());
    const Azimuth az(p, s, t);

    const Vec3 etheta{z * az.cphi, z * az.sphi, -s};
    const Vec3 ephi{-az.sphi, az.cphi, 0.0};

    assoc_legendre_sweep(t, z, s, [&](int l, int m, double pv, double dv, double uv) {
        if (m == 0) {
            const int i = HarmonicBasis::index(l, 1);
            values[i] = pv;
            gradients[i] = dv * etheta;
        } else {
            const int ic = HarmonicBasis::index(l, 2 * m);
            const int is = HarmonicBasis::index(l, 2 * m + 1);
            values[ic] = kSqrt2 * pv * az.cm[m];
            values[is] = kSqrt2 * pv * az.sm[m];
            gradients[ic] = kSqrt2 * (az.cm[m] * dv * etheta - m * az.sm[m] * uv * ephi);
            gradients[is] = kSqrt2 * (az.sm[m] * dv * etheta + m * az.cm[m] * uv * ephi);
        }
    });
}

Eigen::MatrixXd basis_matrix(const HarmonicBasis& basis, const PointSet& ps) {
    Eigen::MatrixXd y(basis.dimension(), static_cast<Eigen::Index>(ps.size()));
    std::vector<double> col(basis.dimension());
    for (std::size_t j = 0; j < ps.size(); ++j) {
        eval_harmonics(basis, ps[j], col.data());
        for (int i = 0; i < basis.dimension(); ++i) y(i, static_cast<Eigen::Index>(j)) = col[i];
    }
    return y;
}

}  // namespace sphquad
