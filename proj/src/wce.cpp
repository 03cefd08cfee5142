#include "sphquad/wce.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sphquad/errors.hpp"
#include "sphquad/summation.hpp"

namespace sphquad {

namespace {

// sign of Gamma(x) for non-pole x
double gamma_sign(double x) {
    if (x > 0.0) return 1.0;
    const int k = static_cast<int>(std::floor(-x));
    return (k % 2 == 0) ? -1.0 : 1.0;
}

double chord_power(double z, double s) {
    const double c = std::max(2.0 - 2.0 * z, 0.0);
    if (c == 0.0) return 0.0;
    return std::pow(c, s - 1.0);
}

}  // namespace

void validate_sobolev_order(double s) {
    if (!(s > 1.0)) throw std::domain_error("Sobolev order requires s > 1");
    if (std::abs(s - 2.0) < 1e-12) {
        throw std::domain_error("Sobolev order s = 2 is outside the closed forms");
    }
}

int wce_smoothing_order(double s) {
    validate_sobolev_order(s);
    return static_cast<int>(std::floor(s - 1.0));
}

double v_const(double s) {
    validate_sobolev_order(s);
    return std::pow(2.0, 2.0 * s - 2.0) / s;
}

double v_const_gamma(double s) {
    validate_sobolev_order(s);
    return std::exp((2.0 * s - 1.0) * std::log(2.0) + std::lgamma(1.5) + std::lgamma(s) -
                    0.5 * std::log(M_PI) - std::lgamma(1.0 + s));
}

double alpha_coeff(double s, int ell) {
    validate_sobolev_order(s);
    if (ell < 0) throw std::domain_error("alpha coefficient index must be nonnegative");
    const int parity_sign = (wce_smoothing_order(s) + 1) % 2 == 0 ? 1 : -1;
    double ratio = 1.0;
    for (int i = 0; i < ell; ++i) {
        ratio *= (1.0 - s + i) / (1.0 + s + i);
    }
    return v_const(s) * parity_sign * ratio;
}

double alpha_coeff_gamma(double s, int ell) {
    validate_sobolev_order(s);
    if (ell < 0) throw std::domain_error("alpha coefficient index must be nonnegative");
    if (std::abs(s - std::round(s)) < 1e-12) {
        throw std::domain_error("Gamma route needs non-integer s (Gamma(1-s) pole)");
    }
    const int parity_sign = (wce_smoothing_order(s) + 1) % 2 == 0 ? 1 : -1;
    // (1-s)_ell = Gamma(1-s+ell) / Gamma(1-s), (1+s)_ell = Gamma(1+s+ell) / Gamma(1+s)
    const double log_ratio = std::lgamma(1.0 - s + ell) - std::lgamma(1.0 - s) +
                             std::lgamma(1.0 + s) - std::lgamma(1.0 + s + ell);
    const double sign = gamma_sign(1.0 - s + ell) * gamma_sign(1.0 - s);
    return v_const_gamma(s) * parity_sign * sign * std::exp(log_ratio);
}

double wce_pair_kernel(double z, double s) {
    validate_sobolev_order(s);
    if (std::abs(z) > 1.0 + 1e-12) throw std::domain_error("inner product outside [-1, 1]");
    z = std::clamp(z, -1.0, 1.0);
    const int L = wce_smoothing_order(s);
    if (L == 0) return chord_power(z, s);

    const double parity_sign = (L + 1) % 2 == 0 ? 1.0 : -1.0;
    double q = 0.0;
    double pm2 = 1.0, pm1 = z;
    for (int ell = 1; ell <= L; ++ell) {
        const double p = (ell == 1) ? z
                                    : ((2 * ell - 1) * z * pm1 - (ell - 1) * pm2) / ell;
        if (ell >= 2) {
            pm2 = pm1;
            pm1 = p;
        }
        const double flip = ((L + 1 - ell) % 2 == 0) ? 1.0 : -1.0;
        q += (flip - 1.0) * alpha_coeff(s, ell) * (2 * ell + 1) * p;
    }
    return q + parity_sign * chord_power(z, s);
}

double wce(const PointSet& ps, double s, int threads) {
    validate_sobolev_order(s);
    if (ps.empty()) throw std::domain_error("wce requires a nonempty point set");
    const int L = wce_smoothing_order(s);
    const std::size_t n = ps.size();
    const double inv_n2 = 1.0 / (static_cast<double>(n) * static_cast<double>(n));

    // coefficients of Q_L, fixed once
    std::vector<double> coeff(static_cast<std::size_t>(L) + 1, 0.0);
    for (int ell = 1; ell <= L; ++ell) {
        const double flip = ((L + 1 - ell) % 2 == 0) ? 1.0 : -1.0;
        coeff[ell] = (flip - 1.0) * alpha_coeff(s, ell) * (2 * ell + 1);
    }
    const double parity_sign = (L + 1) % 2 == 0 ? 1.0 : -1.0;

    auto kernel = [&](double z) {
        if (L == 0) return chord_power(z, s);
        double value = coeff[1] * z;
        double pm2 = 1.0, pm1 = z;
        for (int ell = 2; ell <= L; ++ell) {
            const double p = ((2 * ell - 1) * z * pm1 - (ell - 1) * pm2) / ell;
            value += coeff[ell] * p;
            pm2 = pm1;
            pm1 = p;
        }
        return value + parity_sign * chord_power(z, s);
    };

    // diagonal carries an explicit zero chord term: Q_L(1) only (0 in Case I)
    double diag = 0.0;
    for (int ell = 1; ell <= L; ++ell) diag += coeff[ell];

    // pair mean over all (i, j)
    const double total = chunked_sum(
        n,
        [&](std::size_t i) {
            KahanSum row;
            row.add(diag);
            for (std::size_t j = i + 1; j < n; ++j) {
                const double z = std::clamp(ps[i].dot(ps[j]), -1.0, 1.0);
                row.add(2.0 * kernel(z));
            }
            return row.value();
        },
        threads);
    const double mean = inv_n2 * total;

    double square;
    if (L == 0) {
        square = v_const(s) - mean;
    } else {
        square = mean - parity_sign * v_const(s);
    }
    if (square < -1e-12) {
        throw NegativeRadicandError("worst-case error radicand is negative", square);
    }
    if (square < 0.0) square = 0.0;  // roundoff clamp
    return std::sqrt(square);
}

}  // namespace sphquad
