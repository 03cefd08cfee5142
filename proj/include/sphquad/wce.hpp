#pragma once

#include "sphquad/pointset.hpp"

namespace sphquad {

/// Sobolev order s: s > 1 and s != 2 (the closed forms below split at s = 2
/// and are not defined there). Integer s > 2 is evaluated as written.
void validate_sobolev_order(double s);

/// L = floor(s - 1), the number of kernel correction terms.
int wce_smoothing_order(double s);

/// V_{2-2s}(S^2) = 2^(2s-2) / s, the double-integral normalization.
double v_const(double s);
/// Same constant through 2^(2s-1) Gamma(3/2) Gamma(s) / (sqrt(pi) Gamma(1+s));
/// independent route for cross-checking.
double v_const_gamma(double s);

/// alpha_ell = V * (-1)^(L+1) * (1-s)_ell / (1+s)_ell (rising factorials).
double alpha_coeff(double s, int ell);
/// Gamma-function route (log-gamma with sign tracking); non-integer s only.
double alpha_coeff_gamma(double s, int ell);

/// Per-pair summand as a function of the inner product z = x_i . x_j:
/// |x - y|^(2s-2) = (2 - 2z)^(s-1) for 1 < s < 2, and
/// Q_L(z) + (-1)^(L+1) (2-2z)^(s-1) for s > 2 with
/// Q_L(z) = sum_{ell=1..L} ((-1)^(L+1-ell) - 1) alpha_ell (2 ell + 1) P_ell(z).
/// Coincident pairs contribute an explicit zero chord term.
double wce_pair_kernel(double z, double s);

/// Worst-case equal-weight quadrature error in the unit ball of H^s(S^2):
///   1 < s < 2:  wce = sqrt( V - (1/N^2) sum_ij (2-2 z_ij)^(s-1) )
///   s > 2:      wce = sqrt( (1/N^2) sum_ij kernel(z_ij) - (-1)^(L+1) V ).
/// Roundoff-negative squares are clamped to zero. O(N^2), deterministic for
/// any thread count.
double wce(const PointSet& ps, double s, int threads = 1);

}  // namespace sphquad
