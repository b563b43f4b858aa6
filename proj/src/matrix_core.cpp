#include "opdisk/matrix_core.hpp"

#include <algorithm>
#include <limits>

namespace opdisk {

namespace {

void require_square(const ComplexMatrix& a, const char* who) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch(std::string(who) + ": matrix is " + std::to_string(a.rows()) +
                            "x" + std::to_string(a.cols()) + ", expected square");
  }
}

// Eigenvalues of a^* a (exactly Hermitian up to roundoff; only the lower
// triangle is read), clamped at zero.  Used for singular values without going
// through the hermiticity gate of herm_eig.
RealVector gram_eigenvalues(const ComplexMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a.adjoint() * a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseMax(0.0);
}

}  // namespace

double op_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return std::sqrt(gram_eigenvalues(a).maxCoeff());
}

double min_singular_value(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return std::sqrt(gram_eigenvalues(a).minCoeff());
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  return 0.5 * (a + a.adjoint());
}

HermitianEig herm_eig(const ComplexMatrix& a, const Tolerances& tol) {
  require_square(a, "herm_eig");
  const double defect = op_norm(a - a.adjoint());
  if (!(defect <= tol.eps_check)) {
    throw NotHermitian("herm_eig: ||a - a^*|| = " + std::to_string(defect));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a);
  if (es.info() != Eigen::Success) {
    throw Error("herm_eig: eigensolver failed to converge");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

PolarDecomposition polar(const ComplexMatrix& z, const Tolerances& tol) {
  require_square(z, "polar");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(z.adjoint() * z);
  if (es.info() != Eigen::Success) {
    throw Error("polar: eigensolver failed to converge");
  }
  const RealVector s = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix& v = es.eigenvectors();
  RealVector sinv(s.size());
  Index rank = 0;
  for (Index i = 0; i < s.size(); ++i) {
    if (s[i] > tol.eps_rank) {
      sinv[i] = 1.0 / s[i];
      ++rank;
    } else {
      sinv[i] = 0.0;
    }
  }
  PolarDecomposition out;
  out.modulus = v * s.asDiagonal() * v.adjoint();
  out.omega = z * (v * sinv.asDiagonal() * v.adjoint());
  out.rank = rank;
  return out;
}

ComplexMatrix inverse(const ComplexMatrix& a, const Tolerances& tol) {
  require_square(a, "inverse");
  const double smin = min_singular_value(a);
  if (!(smin > tol.eps_rank)) {
    throw SingularMatrix("inverse: smallest singular value " + std::to_string(smin) +
                         " at or below eps_rank");
  }
  return a.partialPivLu().solve(ComplexMatrix::Identity(a.rows(), a.cols()));
}

bool is_positive_invertible(const ComplexMatrix& a, const Tolerances& tol) {
  if (a.rows() != a.cols()) return false;
  if (op_norm(a - a.adjoint()) > tol.eps_check) return false;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a, Eigen::EigenvaluesOnly);
  return es.info() == Eigen::Success && es.eigenvalues().minCoeff() > tol.eps_rank;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& a, const Tolerances& tol) {
  return fun_calc(a, [&](double t) {
    if (t < -tol.eps_check) return std::numeric_limits<double>::quiet_NaN();
    return std::sqrt(std::max(t, 0.0));
  }, tol);
}

ComplexMatrix inv_sqrt_pd(const ComplexMatrix& a, const Tolerances& tol) {
  return fun_calc(a, [&](double t) {
    if (t <= tol.eps_rank) return std::numeric_limits<double>::quiet_NaN();
    return 1.0 / std::sqrt(t);
  }, tol);
}

}  // namespace opdisk
