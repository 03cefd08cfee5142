#pragma once

#include <Eigen/Core>
#include <vector>

#include "sphquad/pointset.hpp"
#include "sphquad/sphere.hpp"

namespace sphquad {

/// Classical Legendre polynomial, P_ell(1) = 1. |x| <= 1 + 1e-12 required;
/// values inside the tolerance band are clamped to [-1, 1].
double legendre_p(int ell, double x);
double legendre_p_derivative(int ell, double x);

/// Fills out[0..max_ell] with P_0(x)..P_max_ell(x).
void legendre_p_all(int max_ell, double x, double* out);

/// Real orthonormal spherical-harmonic basis of degree <= t. Linear index
/// runs over ell = 0..t, and within a degree over k = 1..2*ell+1 ordered as
///   k = 1          -> m = 0 component
///   k = 2m         -> sqrt(2) * Pbar_{ell m}(cos theta) * cos(m phi)
///   k = 2m + 1     -> sqrt(2) * Pbar_{ell m}(cos theta) * sin(m phi)
/// with Pbar the orthonormal associated Legendre function, so the (0,1)
/// entry is 1/sqrt(4*pi) and sum_k Y_{ell k}(x) Y_{ell k}(y) equals
/// (2*ell+1)/(4*pi) * P_ell(x . y).
struct HarmonicBasis {
    int degree = 0;

    int dimension() const { return (degree + 1) * (degree + 1); }
    static int index(int ell, int k) { return ell * ell + (k - 1); }
};

/// values must hold basis.dimension() entries.
void eval_harmonics(const HarmonicBasis& basis, const UnitPoint& p, double* values);
std::vector<double> eval_harmonics(const HarmonicBasis& basis, const UnitPoint& p);

/// Tangential (surface) gradients alongside values; both arrays sized
/// basis.dimension(). Well-defined at the poles, where the azimuth is
/// canonicalized to 0.
void eval_harmonics_gradient(const HarmonicBasis& basis, const UnitPoint& p, double* values,
                             Vec3* gradients);

/// dimension x N matrix, rows indexed by (ell, k), columns by point.
Eigen::MatrixXd basis_matrix(const HarmonicBasis& basis, const PointSet& ps);

}  // namespace sphquad
