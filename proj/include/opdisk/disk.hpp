#pragma once

#include <utility>

#include "opdisk/pair_space.hpp"

namespace opdisk {

/// Point of the operator disk D = { z : ||z|| < 1 }.  Strict membership is
/// checked with margin eps_check on construction.
class DiskPoint {
 public:
  explicit DiskPoint(ComplexMatrix z, const Tolerances& tol = {});
  const ComplexMatrix& mat() const { return z_; }
  Index dim() const { return z_.rows(); }

 private:
  ComplexMatrix z_;
};

/// Point of the boundary sphere { a : ||a|| = 1 }, checked within eps_check.
class BoundaryPoint {
 public:
  explicit BoundaryPoint(ComplexMatrix a, const Tolerances& tol = {});
  const ComplexMatrix& mat() const { return a_; }
  Index dim() const { return a_.rows(); }

 private:
  ComplexMatrix a_;
};

/// 1 - z^* z, the positive invertible defect of a disk point.
ComplexMatrix defect(const DiskPoint& z);

/// Fractional-linear action (g21 + g22 m)(g11 + g12 m)^{-1} without membership
/// checks on m; throws SingularDenominator if the denominator is singular.
ComplexMatrix mobius_apply(const BlockMatrix& g, const ComplexMatrix& m,
                           const Tolerances& tol = {});

/// Action of a theta isometry on the disk.  Throws NotThetaUnitary when g
/// fails the membership test and SingularDenominator defensively.
DiskPoint mobius(const BlockMatrix& g, const DiskPoint& z, const Tolerances& tol = {});

/// Action of a theta isometry on the boundary sphere.
BoundaryPoint boundary_action(const BlockMatrix& g, const BoundaryPoint& a,
                              const Tolerances& tol = {});

/// Distinguished triangular isometry moving the origin to z, with parameters
/// g = (1+z)(1-z^*z)^{-1/2} and x = (1-z^*z)^{-1/2} (z-z^*)/2 (1-z^*z)^{-1/2}.
BlockMatrix g_z(const DiskPoint& z, const Tolerances& tol = {});

/// Inverse of g_z, i.e. rho g_z^* rho.
BlockMatrix g_z_inverse(const DiskPoint& z, const Tolerances& tol = {});

/// The translate w = g_z(z0)^{-1} . z1, evaluated through the closed form
///   w = d^{-1/2} (1+z0^*)(1+z0)^{-1} (z1-z0)(1-z0^*z1)^{-1} d^{1/2},
/// with d = 1 - z0^* z0.
ComplexMatrix translate_to_origin(const DiskPoint& z0, const DiskPoint& z1,
                                  const Tolerances& tol = {});

/// Initial velocity of the unit-time geodesic from 0 to z:
/// alpha = omega (log(1+|z|) - log(1-|z|))/2, sharing the polar isometry of z.
ComplexMatrix alpha_of(const DiskPoint& z, const Tolerances& tol = {});

/// Geodesic through the origin reaching z at t = 1: t -> omega tanh(t |alpha|).
struct GeodesicThroughOrigin {
  ComplexMatrix alpha;
  ComplexMatrix omega;
  ComplexMatrix modulus_alpha;

  ComplexMatrix sample(double t) const;
};

GeodesicThroughOrigin geodesic_origin(const DiskPoint& z, const Tolerances& tol = {});

/// Unique geodesic from z0 (t=0) to z1 (t=1): the origin geodesic of
/// w = g_z(z0)^{-1} . z1 pushed forward by g_z(z0).
struct Geodesic {
  BlockMatrix translate;
  GeodesicThroughOrigin base;

  ComplexMatrix sample(double t) const;
};

Geodesic geodesic(const DiskPoint& z0, const DiskPoint& z1, const Tolerances& tol = {});

/// Exponential at the origin: any matrix v maps to omega_v tanh(|v|).
DiskPoint exp0(const ComplexMatrix& v, const Tolerances& tol = {});

/// Logarithm at the origin (same matrix as alpha_of).
ComplexMatrix log0(const DiskPoint& z, const Tolerances& tol = {});

/// Translated exponential / logarithm: exp_at(z0, v) = g_z(z0) . exp0(v) and
/// log_at(z0, z1) = log0(g_z(z0)^{-1} . z1); mutually inverse.
DiskPoint exp_at(const DiskPoint& z0, const ComplexMatrix& v, const Tolerances& tol = {});
ComplexMatrix log_at(const DiskPoint& z0, const DiskPoint& z1, const Tolerances& tol = {});

/// Invariant distance d(z1, z2) = log((1+||w||)/(1-||w||))/2 with w the
/// translate of z2 by g_z(z1)^{-1}.
double dist(const DiskPoint& z1, const DiskPoint& z2, const Tolerances& tol = {});

/// Boundary limits of the geodesic through z0 and z1 as t -> -inf / +inf:
/// the translated pair (g.(-omega0), g.(+omega0)) for omega0 the polar
/// isometry of the initial velocity.  Requires z0 != z1 beyond eps_check.
std::pair<BoundaryPoint, BoundaryPoint> limit_points(const DiskPoint& z0,
                                                     const DiskPoint& z1,
                                                     const Tolerances& tol = {});

/// Embedding of the disk into positive invertible 2n x 2n matrices:
///   [ (1+z^*z)(1-z^*z)^{-1}   -2 z^*(1-zz^*)^{-1} ]
///   [ -2 z(1-z^*z)^{-1}        (1+zz^*)(1-zz^*)^{-1} ]
BlockMatrix phi_D(const DiskPoint& a, const Tolerances& tol = {});

/// Factorization 1 - a^*a = h q h of the boundary defect with q the support
/// projection of 1 - a^*a and h = ((1-a^*a) + (1-q))^{1/2} positive invertible.
struct DefectFactorization {
  ComplexMatrix h;
  ComplexMatrix q;
};

DefectFactorization boundary_defect_factor(const BoundaryPoint& a, const Tolerances& tol = {});

}  // namespace opdisk
