#pragma once

#include <cstdint>
#include <vector>

#include "sphquad/pointset.hpp"
#include "sphquad/sphere.hpp"

namespace sphquad {

/// Equal-weight quadrature defect
///   A(X, t) = (4*pi/N^2) * sum_{ell=1..t} sum_k ( sum_j Y_{ell k}(x_j) )^2,
/// zero exactly when X integrates every polynomial of degree <= t with equal
/// weights. Evaluated through the harmonic basis (streamed row sums).
double a_nt(const PointSet& ps, int t);

/// Same quantity through the addition theorem,
///   (1/N^2) * sum_i sum_j sum_{ell=1..t} (2*ell+1) P_ell(x_i . x_j);
/// independent route kept for cross-checking, O(N^2 t).
double a_nt_kernel(const PointSet& ps, int t, int threads = 1);

/// Euclidean gradient of A(X, t) projected onto each point's tangent plane;
/// one Vec3 per point.
std::vector<Vec3> a_nt_gradient(const PointSet& ps, int t);

/// Smallest N admitting a spherical t-design:
/// (t+1)(t+3)/4 for odd t, (t+2)^2/4 for even t.
int design_lower_bound(int t);

struct DesignOptions {
    int max_iterations = 400;
    double tolerance = 1e-12;   // residual A(X, t) declared converged below this
    std::uint64_t seed = 0;     // deterministic init jitter
};

struct DesignResult {
    PointSet points;
    int degree = 0;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Levenberg-Marquardt minimization of the residual vector
/// r_{ell k} = (sqrt(4*pi)/N) sum_j Y_{ell k}(x_j), ell = 1..t, from an
/// equal-area start with seeded tangent jitter; points move in per-point
/// tangent planes with renormalization retraction. Deterministic for a given
/// seed. 1 <= t <= 30; N defaults to (t+1)^2 and must be >= the lower bound.
DesignResult generate_design(int t, int N = -1, const DesignOptions& opts = {});

struct VerifyReport {
    double residual = 0.0;        // A(X, t)
    double max_poly_error = 0.0;  // worst equal-weight error over random polynomials
    bool ok = false;
};

/// Checks A(X, t) <= tol and integrates 20 random unit-coefficient
/// polynomials of degree <= t (deterministic draw), requiring equal-weight
/// averages within 10*tol of the exact integrals.
VerifyReport verify_design(const PointSet& ps, int t, double tol = 1e-12);

struct GramReport {
    double log_det = 0.0;  // log pseudo-determinant over retained eigenvalues
    int rank = 0;
    bool singular = false;  // square case with smallest eigenvalue < 1e-14 * largest
};

/// Diagnostics of the Gram matrix G_t = Y_t^T Y_t of the degree-t basis on X.
GramReport gram_logdet(const PointSet& ps, int t);

/// Max-norm of E * G_t * e with E = [e, -I_{N-1}]: the spread of the Gram row
/// sums, zero for an exact design with N = (t+1)^2.
double constraint_norm(const PointSet& ps, int t);

}  // namespace sphquad
