#include "opdisk/projective.hpp"

namespace opdisk {

KPoint::KPoint(PairVector x, const Tolerances& tol) : x_(std::move(x)) {
  if (x_.x1.rows() != x_.x1.cols() || x_.x2.rows() != x_.x2.cols() ||
      x_.x1.rows() != x_.x2.rows()) {
    throw DimensionMismatch("KPoint: components must be square of equal dimension");
  }
  const Index n = dim();
  const double defect = op_norm(theta(x_, x_) - ComplexMatrix::Identity(n, n));
  if (!(defect <= tol.eps_check)) {
    throw NotOnHyperboloid("KPoint: ||theta(x,x) - 1|| = " + std::to_string(defect));
  }
  if (!(min_singular_value(x_.x1) > tol.eps_rank)) {
    throw SingularFirstComponent("KPoint: x1 is singular");
  }
}

Line::Line(const DiskPoint& z, const Tolerances& tol)
    : generator_(lift(z, tol)), point_(z) {}

Line::Line(KPoint generator, const Tolerances& tol)
    : generator_(std::move(generator)), point_(project(generator_.pair(), tol)) {}

bool same_line(const Line& a, const Line& b, const Tolerances& tol) {
  if (a.dim() != b.dim()) return false;
  return op_norm(a.point().mat() - b.point().mat()) <= tol.eps_check;
}

KPoint lift(const DiskPoint& z, const Tolerances& tol) {
  const ComplexMatrix s = inv_sqrt_pd(defect(z), tol);
  return KPoint({s, z.mat() * s}, tol);
}

DiskPoint project(const PairVector& x, const Tolerances& tol) {
  if (!(min_singular_value(x.x1) > tol.eps_rank)) {
    throw SingularFirstComponent("project: x1 is singular");
  }
  return DiskPoint(x.x2 * inverse(x.x1, tol), tol);
}

PairVector ortho_theta_generator(const KPoint& x, const Tolerances& tol) {
  const ComplexMatrix y1 = inverse(x.pair().x1.adjoint(), tol) * x.pair().x2.adjoint();
  return {y1, ComplexMatrix::Identity(x.dim(), x.dim())};
}

QProjection::QProjection(BlockMatrix p, const Tolerances& tol) : p_(std::move(p)) {
  const double idem = block_norm(p_ * p_ - p_);
  if (!(idem <= tol.eps_check)) {
    throw NotProjection("QProjection: ||p^2 - p|| = " + std::to_string(idem));
  }
  const BlockMatrix rho = BlockMatrix::rho(p_.dim());
  const double sym = block_norm(rho * p_.adjoint() * rho - p_);
  if (!(sym <= tol.eps_check)) {
    throw NotProjection("QProjection: ||rho p^* rho - p|| = " + std::to_string(sym));
  }
  const BlockMatrix eps = p_ + p_ - BlockMatrix::identity(p_.dim());
  if (!is_positive_invertible((rho * eps).to_dense(), tol)) {
    throw NotProjection("QProjection: rho (2p - 1) is not positive invertible");
  }
}

QProjection q_projection(const Line& l, const Tolerances& tol) {
  const PairVector& x = l.generator().pair();
  return QProjection({x.x1 * x.x1.adjoint(), -x.x1 * x.x2.adjoint(),
                      x.x2 * x.x1.adjoint(), -x.x2 * x.x2.adjoint()},
                     tol);
}

TangentVec::TangentVec(Line at_in, PairVector v_in, const Tolerances& tol)
    : at(std::move(at_in)), v(std::move(v_in)) {
  const double defect = op_norm(theta(at.generator().pair(), v));
  if (!(defect <= tol.eps_check)) {
    throw NotTangent("TangentVec: ||theta(generator, v)|| = " + std::to_string(defect));
  }
}

double finsler_norm(const TangentVec& V, const Tolerances& tol) {
  const double defect = op_norm(theta(V.at.generator().pair(), V.v));
  if (!(defect <= tol.eps_check)) {
    throw NotTangent("finsler_norm: vector is not tangent at the line");
  }
  const ComplexMatrix gram = -theta(V.v, V.v);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol.eps_check) {
    throw NotTangent("finsler_norm: -theta(v,v) is not positive semidefinite");
  }
  return std::sqrt(op_norm(gram));
}

bool is_hyperbolic(const PairVector& x, const Tolerances& tol) {
  if (!(min_singular_value(x.x1) > tol.eps_rank)) return false;
  return is_positive_invertible(theta(x, x), tol);
}

RankOneCheck rank_one_projection_criterion(const PairVector& x, const Tolerances& tol) {
  if (!(pair_norm(x) > tol.eps_rank)) {
    throw ZeroVector("rank_one_projection_criterion: x = 0");
  }
  const ComplexMatrix c = inner(x, x);
  const HermitianEig es = herm_eig(c, tol);
  RealVector d(es.eigenvalues.size());
  for (Index i = 0; i < d.size(); ++i) {
    const double lam = es.eigenvalues[i];
    d[i] = lam > tol.eps_rank ? 1.0 / std::sqrt(lam) : 0.0;
  }
  RankOneCheck out;
  out.b = es.eigenvectors * d.asDiagonal() * es.eigenvectors.adjoint();
  const ComplexMatrix p = out.b.adjoint() * c * out.b;
  out.holds = op_norm(p * p - p) <= tol.eps_check &&
              op_norm(p - p.adjoint()) <= tol.eps_check;
  return out;
}

}  // namespace opdisk
