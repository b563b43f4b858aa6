#pragma once

#include "opdisk/matrix_core.hpp"

namespace opdisk {

/// Element of the free right module A^2 over A = n x n complex matrices,
/// written as a column pair (x1, x2).
struct PairVector {
  ComplexMatrix x1;
  ComplexMatrix x2;

  Index dim() const { return x1.rows(); }
};

/// Right module action x . a and linear combinations.
PairVector operator*(const PairVector& x, const ComplexMatrix& a);
PairVector operator+(const PairVector& x, const PairVector& y);
PairVector operator-(const PairVector& x, const PairVector& y);

/// max of the component operator norms; used for residual checks.
double pair_norm(const PairVector& x);

/// 2x2 operator block matrix acting on A^2 from the left.
struct BlockMatrix {
  ComplexMatrix g11, g12, g21, g22;

  Index dim() const { return g11.rows(); }
  ComplexMatrix to_dense() const;
  BlockMatrix adjoint() const;

  static BlockMatrix identity(Index n);
  /// Signature matrix of the indefinite form: diag(1, -1).
  static BlockMatrix rho(Index n);
  static BlockMatrix diag(ComplexMatrix u1, ComplexMatrix u2);
  static BlockMatrix from_dense(const ComplexMatrix& m);
};

BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b);
PairVector operator*(const BlockMatrix& g, const PairVector& x);
BlockMatrix operator+(const BlockMatrix& a, const BlockMatrix& b);
BlockMatrix operator-(const BlockMatrix& a, const BlockMatrix& b);

/// Operator norm of the dense 2n x 2n realization.
double block_norm(const BlockMatrix& g);

/// A-valued definite pairing <x, y> = x1^* y1 + x2^* y2.
ComplexMatrix inner(const PairVector& x, const PairVector& y);

/// A-valued indefinite pairing theta(x, y) = x1^* y1 - x2^* y2.
ComplexMatrix theta(const PairVector& x, const PairVector& y);

/// True when inner(x, x) is positive invertible, i.e. x generates a
/// complemented submodule.
bool is_regular(const PairVector& x, const Tolerances& tol = {});

/// Membership test for the isometry group of theta: g^* rho g = rho within
/// eps_check and g invertible.
bool is_theta_unitary(const BlockMatrix& g, const Tolerances& tol = {});

/// Inverse of a theta isometry, computed as rho g^* rho.
/// Throws NotThetaUnitary if g fails the membership test.
BlockMatrix theta_unitary_inverse(const BlockMatrix& g, const Tolerances& tol = {});

/// Parameters of a triangular (Borel-type) element: g invertible, x
/// anti-Hermitian.  Validated on construction (SingularG / NotAntiHermitian).
struct BorelParams {
  ComplexMatrix g;
  ComplexMatrix x;

  BorelParams(ComplexMatrix g_in, ComplexMatrix x_in, const Tolerances& tol = {});
};

/// Triangular theta isometry built from its parameters.  With gh = (g^*)^{-1}:
///   [ (g+gh)/2 - gh x   (g-gh)/2 - gh x ]
///   [ (g-gh)/2 + gh x   (g+gh)/2 + gh x ]
BlockMatrix borel_element(const BorelParams& p, const Tolerances& tol = {});

/// Recovers the parameters of a triangular element and validates the
/// reconstruction within eps_check; throws NotBorel otherwise.
BorelParams borel_factor(const BlockMatrix& b, const Tolerances& tol = {});

}  // namespace opdisk
