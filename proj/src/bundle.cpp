#include "opdisk/bundle.hpp"

namespace opdisk {

namespace {

// exp(s M) for M = velocity_block(alpha), evaluated spectrally on the dense
// Hermitian realization.
ComplexMatrix exp_velocity(const ComplexMatrix& alpha, double s, const Tolerances& tol) {
  const ComplexMatrix dense = velocity_block(alpha).to_dense();
  return fun_calc(dense, [s](double t) { return std::exp(s * t); }, tol);
}

PairVector column_pair(const ComplexMatrix& m) {
  const Index n = m.rows() / 2;
  return {m.topLeftCorner(n, n), m.bottomLeftCorner(n, n)};
}

}  // namespace

BlockMatrix velocity_block(const ComplexMatrix& alpha) {
  if (alpha.rows() != alpha.cols()) {
    throw DimensionMismatch("velocity_block: alpha must be square");
  }
  const Index n = alpha.rows();
  return {ComplexMatrix::Zero(n, n), alpha.adjoint(), alpha, ComplexMatrix::Zero(n, n)};
}

QTangent::QTangent(QProjection at, BlockMatrix X, const Tolerances& tol)
    : at_(std::move(at)), X_(std::move(X)) {
  if (at_.dim() != X_.dim()) {
    throw DimensionMismatch("QTangent: projection and block dimensions differ");
  }
  const Index n = X_.dim();
  const BlockMatrix rho = BlockMatrix::rho(n);
  const double sym = block_norm(rho * X_.adjoint() * rho - X_);
  if (!(sym <= tol.eps_check)) {
    throw NotTangent("QTangent: ||rho X^* rho - X|| = " + std::to_string(sym));
  }
  const BlockMatrix& q = at_.block();
  const BlockMatrix comp = BlockMatrix::identity(n) - q;
  const double codiag =
      std::max(block_norm(q * X_ * q), block_norm(comp * X_ * comp));
  if (!(codiag <= tol.eps_check)) {
    throw NotTangent("QTangent: X is not codiagonal at q, residual " +
                     std::to_string(codiag));
  }
}

PairVector kappa(const KPoint& x, const BlockMatrix& X, const Tolerances& tol) {
  const PairVector v = X * x.pair();
  const double defect = op_norm(theta(x.pair(), v));
  if (!(defect <= tol.eps_check)) {
    throw NotTangent("kappa: X x leaves the theta-orthocomplement, residual " +
                     std::to_string(defect));
  }
  return v;
}

Endo gamma_inner(const BlockMatrix& X, const BlockMatrix& Y, const KPoint& x,
                 const Tolerances& tol) {
  const PairVector vx = kappa(x, X, tol);
  const PairVector vy = kappa(x, Y, tol);
  return {Line(x, tol), -theta(vx, vy)};
}

Endo mod0_log(const DiskPoint& z, const Tolerances& tol) {
  const PolarDecomposition p = polar(z.mat(), tol);
  const ComplexMatrix c = fun_calc(p.modulus,
      [](double t) { return std::log1p(t) - std::log1p(-t); }, tol);
  const Index n = z.dim();
  const DiskPoint origin(ComplexMatrix::Zero(n, n), tol);
  return {Line(origin, tol), c};
}

Endo transport_to_origin(const DiskPoint& z, const Endo& e, const Tolerances& tol) {
  if (z.dim() != e.line.dim() ||
      !(op_norm(e.line.point().mat() - z.mat()) <= tol.eps_check)) {
    throw BaseMismatch("transport_to_origin: endomorphism is not based at the line of z");
  }
  const ComplexMatrix alpha = alpha_of(z, tol);
  const Index n = z.dim();

  // Image of the origin generator under exp(M); lies on the line of z.
  const PairVector w = column_pair(exp_velocity(alpha, 1.0, tol));
  const PairVector xz = e.line.generator().pair();
  const ComplexMatrix lambda = theta(xz, w);
  const PairVector image = xz * (e.coefficient * lambda);
  const ComplexMatrix em = exp_velocity(alpha, -1.0, tol);
  const PairVector back{em.topLeftCorner(n, n) * image.x1 + em.topRightCorner(n, n) * image.x2,
                        em.bottomLeftCorner(n, n) * image.x1 + em.bottomRightCorner(n, n) * image.x2};
  const double stray = op_norm(back.x2);
  if (!(stray <= tol.eps_check * std::max(1.0, pair_norm(back)))) {
    throw Error("transport_to_origin: transported generator leaves the origin line, residual " +
                std::to_string(stray));
  }
  const DiskPoint origin(ComplexMatrix::Zero(n, n), tol);
  return {Line(origin, tol), back.x1};
}

double verify_el_teo(const DiskPoint& z, const Tolerances& tol) {
  const ComplexMatrix lhs =
      fun_calc(mod0_log(z, tol).coefficient, [](double t) { return std::exp(t); }, tol);
  const ComplexMatrix rhs = transport_to_origin(z, cr0(z, tol), tol).coefficient;
  return op_norm(lhs - rhs);
}

double verify_coro(const DiskPoint& z0, const DiskPoint& z1, const Tolerances& tol) {
  if (!(op_norm(z1.mat() - z0.mat()) > tol.eps_check)) {
    throw CoincidentPoints("verify_coro: z0 and z1 coincide within eps_check");
  }
  const DiskPoint w(translate_to_origin(z0, z1, tol), tol);
  const double base = verify_el_teo(w, tol);
  const ComplexMatrix transported =
      transport_to_origin(w, cr0(w, tol), tol).coefficient;
  const ComplexMatrix log_cr = fun_calc(hermitian_part(transported),
      [](double t) { return std::log(t); }, tol);
  const double norm_identity =
      std::abs(op_norm(mod0_log(w, tol).coefficient) - op_norm(log_cr));
  return base + norm_identity;
}

}  // namespace opdisk
