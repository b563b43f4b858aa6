#pragma once

#include "opdisk/cross_ratio.hpp"

namespace opdisk {

/// Velocity block matrix of the one-parameter geodesic group at the origin:
/// [[0, alpha^*], [alpha, 0]].  Hermitian as a dense 2n x 2n matrix.
BlockMatrix velocity_block(const ComplexMatrix& alpha);

/// Tangent data at a projection q in the symmetric space: a block matrix that
/// is theta-symmetric (rho X^* rho = X) and codiagonal at q (qXq = 0 and
/// (1-q)X(1-q) = 0).  The commutator [velocity_block(alpha), q] is the model
/// example.  Both invariants are checked on construction.
class QTangent {
 public:
  QTangent(QProjection at, BlockMatrix X, const Tolerances& tol = {});
  const QProjection& at() const { return at_; }
  const BlockMatrix& block() const { return X_; }

 private:
  QProjection at_;
  BlockMatrix X_;
};

/// Basic 1-form kappa_x(X) = X x.  Requires the result to lie in the
/// theta-orthocomplement of x (throws NotTangent otherwise).
PairVector kappa(const KPoint& x, const BlockMatrix& X, const Tolerances& tol = {});

/// Bundle inner product <X, Y>_x = -theta(X x, Y x), as an endomorphism of
/// the line of x.  Positive semidefinite coefficient when X = Y.
Endo gamma_inner(const BlockMatrix& X, const BlockMatrix& Y, const KPoint& x,
                 const Tolerances& tol = {});

/// Theta-modulus of the logarithm at the origin: endomorphism of the line of 0
/// with coefficient log((1+|z|)(1-|z|)^{-1}) = 2 |alpha_of(z)|.
Endo mod0_log(const DiskPoint& z, const Tolerances& tol = {});

/// Parallel transport of an endomorphism at the line of z back to the line of
/// the origin by conjugation with exp(-M) (.) exp(M), M = velocity_block of
/// alpha_of(z).  Throws BaseMismatch when e is not based at the line of z.
Endo transport_to_origin(const DiskPoint& z, const Endo& e, const Tolerances& tol = {});

/// Residual of the identity exp(mod0_log(z)) = transport_to_origin(z, cr0(z)).
double verify_el_teo(const DiskPoint& z, const Tolerances& tol = {});

/// Residual of the translated identity at a pair of points: reduces through
/// g_z(z0) to the origin identity at w = g_z(z0)^{-1}.z1 and adds the
/// norm-identity residual | ||mod0|| - ||log(transported coefficient)|| |.
double verify_coro(const DiskPoint& z0, const DiskPoint& z1, const Tolerances& tol = {});

}  // namespace opdisk
