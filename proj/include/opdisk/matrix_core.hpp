#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "opdisk/errors.hpp"

namespace opdisk {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Numerical thresholds shared across the library.  eps_rank decides ranks and
/// invertibility (absolute cutoff on singular values); eps_check gates
/// structural residuals such as hermiticity or group membership.
struct Tolerances {
  double eps_rank = 1e-10;
  double eps_check = 1e-8;
};

/// Eigendecomposition of a Hermitian matrix: a = eigenvectors * diag(eigenvalues) * eigenvectors^*.
struct HermitianEig {
  RealVector eigenvalues;     ///< real, ascending
  ComplexMatrix eigenvectors; ///< unitary; column i pairs with eigenvalues[i]
};

/// Polar data of a square matrix: z = omega * modulus with modulus = (z^* z)^{1/2}
/// positive semidefinite and omega a partial isometry supported on range(modulus).
struct PolarDecomposition {
  ComplexMatrix omega;
  ComplexMatrix modulus;
  Index rank;  ///< number of singular values of z above eps_rank
};

/// Largest singular value.
double op_norm(const ComplexMatrix& a);

/// Smallest singular value.
double min_singular_value(const ComplexMatrix& a);

/// (a + a^*)/2.
ComplexMatrix hermitian_part(const ComplexMatrix& a);

/// Spectral decomposition; requires ||a - a^*|| <= eps_check (throws NotHermitian).
HermitianEig herm_eig(const ComplexMatrix& a, const Tolerances& tol = {});

/// Polar decomposition through the spectral kernel applied to z^* z.
/// Singular values at or below eps_rank are treated as zero, so omega is a
/// partial isometry of the stated rank; polar of the zero matrix has omega = 0.
PolarDecomposition polar(const ComplexMatrix& z, const Tolerances& tol = {});

/// Inverse of a square matrix; throws SingularMatrix when the smallest singular
/// value is at or below eps_rank.
ComplexMatrix inverse(const ComplexMatrix& a, const Tolerances& tol = {});

/// True when a is Hermitian within eps_check with all eigenvalues above eps_rank.
bool is_positive_invertible(const ComplexMatrix& a, const Tolerances& tol = {});

/// Continuous functional calculus on a Hermitian argument: applies the scalar
/// function f to each eigenvalue.  Throws DomainError if f produces a
/// non-finite value on some eigenvalue.
template <class F>
ComplexMatrix fun_calc(const ComplexMatrix& a, F&& f, const Tolerances& tol = {}) {
  const HermitianEig es = herm_eig(a, tol);
  RealVector fx(es.eigenvalues.size());
  for (Index i = 0; i < es.eigenvalues.size(); ++i) {
    fx[i] = f(es.eigenvalues[i]);
    if (!std::isfinite(fx[i])) {
      throw DomainError("fun_calc: scalar function not finite at eigenvalue " +
                        std::to_string(es.eigenvalues[i]));
    }
  }
  return es.eigenvectors * fx.asDiagonal() * es.eigenvectors.adjoint();
}

/// Positive square root of a Hermitian positive semidefinite matrix; eigenvalues
/// in [-eps_check, 0) are clamped to zero before the root.
ComplexMatrix sqrt_psd(const ComplexMatrix& a, const Tolerances& tol = {});

/// Inverse positive square root of a Hermitian positive definite matrix.
ComplexMatrix inv_sqrt_pd(const ComplexMatrix& a, const Tolerances& tol = {});

}  // namespace opdisk
