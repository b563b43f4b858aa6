#include "opdisk/disk.hpp"

namespace opdisk {

DiskPoint::DiskPoint(ComplexMatrix z, const Tolerances& tol) : z_(std::move(z)) {
  if (z_.rows() != z_.cols()) {
    throw DimensionMismatch("DiskPoint: matrix must be square");
  }
  const double norm = op_norm(z_);
  if (!(norm < 1.0 - tol.eps_check)) {
    throw NotInDisk("DiskPoint: op_norm = " + std::to_string(norm));
  }
}

BoundaryPoint::BoundaryPoint(ComplexMatrix a, const Tolerances& tol) : a_(std::move(a)) {
  if (a_.rows() != a_.cols()) {
    throw DimensionMismatch("BoundaryPoint: matrix must be square");
  }
  const double norm = op_norm(a_);
  if (!(std::abs(norm - 1.0) <= tol.eps_check)) {
    throw NotBoundary("BoundaryPoint: op_norm = " + std::to_string(norm));
  }
}

ComplexMatrix defect(const DiskPoint& z) {
  const Index n = z.dim();
  return ComplexMatrix::Identity(n, n) - z.mat().adjoint() * z.mat();
}

ComplexMatrix mobius_apply(const BlockMatrix& g, const ComplexMatrix& m, const Tolerances& tol) {
  if (g.dim() != m.rows() || m.rows() != m.cols()) {
    throw DimensionMismatch("mobius_apply: dimensions disagree");
  }
  const ComplexMatrix den = g.g11 + g.g12 * m;
  if (!(min_singular_value(den) > tol.eps_rank)) {
    throw SingularDenominator("mobius_apply: g11 + g12 z is singular");
  }
  return (g.g21 + g.g22 * m) * inverse(den, tol);
}

DiskPoint mobius(const BlockMatrix& g, const DiskPoint& z, const Tolerances& tol) {
  if (!is_theta_unitary(g, tol)) {
    throw NotThetaUnitary("mobius: g is not a theta isometry");
  }
  return DiskPoint(mobius_apply(g, z.mat(), tol), tol);
}

BoundaryPoint boundary_action(const BlockMatrix& g, const BoundaryPoint& a, const Tolerances& tol) {
  if (!is_theta_unitary(g, tol)) {
    throw NotThetaUnitary("boundary_action: g is not a theta isometry");
  }
  return BoundaryPoint(mobius_apply(g, a.mat(), tol), tol);
}

BlockMatrix g_z(const DiskPoint& z, const Tolerances& tol) {
  const Index n = z.dim();
  const ComplexMatrix s = inv_sqrt_pd(defect(z), tol);
  const ComplexMatrix g = (ComplexMatrix::Identity(n, n) + z.mat()) * s;
  const ComplexMatrix x = 0.5 * s * (z.mat() - z.mat().adjoint()) * s;
  return borel_element(BorelParams(g, x, tol), tol);
}

BlockMatrix g_z_inverse(const DiskPoint& z, const Tolerances& tol) {
  return theta_unitary_inverse(g_z(z, tol), tol);
}

ComplexMatrix translate_to_origin(const DiskPoint& z0, const DiskPoint& z1, const Tolerances& tol) {
  if (z0.dim() != z1.dim()) {
    throw DimensionMismatch("translate_to_origin: dimensions disagree");
  }
  const Index n = z0.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix d = defect(z0);
  const ComplexMatrix den = id - z0.mat().adjoint() * z1.mat();
  if (!(min_singular_value(den) > tol.eps_rank)) {
    throw SingularDenominator("translate_to_origin: 1 - z0^* z1 is singular");
  }
  return inv_sqrt_pd(d, tol) * (id + z0.mat().adjoint()) * inverse(id + z0.mat(), tol) *
         (z1.mat() - z0.mat()) * inverse(den, tol) * sqrt_psd(d, tol);
}

ComplexMatrix alpha_of(const DiskPoint& z, const Tolerances& tol) {
  const PolarDecomposition p = polar(z.mat(), tol);
  const ComplexMatrix f = fun_calc(p.modulus,
      [](double t) { return 0.5 * (std::log1p(t) - std::log1p(-t)); }, tol);
  return p.omega * f;
}

ComplexMatrix GeodesicThroughOrigin::sample(double t) const {
  Tolerances tol;
  return omega * fun_calc(modulus_alpha, [t](double s) { return std::tanh(t * s); }, tol);
}

GeodesicThroughOrigin geodesic_origin(const DiskPoint& z, const Tolerances& tol) {
  GeodesicThroughOrigin out;
  out.alpha = alpha_of(z, tol);
  const PolarDecomposition p = polar(out.alpha, tol);
  out.omega = p.omega;
  out.modulus_alpha = p.modulus;
  return out;
}

ComplexMatrix Geodesic::sample(double t) const {
  return mobius_apply(translate, base.sample(t));
}

Geodesic geodesic(const DiskPoint& z0, const DiskPoint& z1, const Tolerances& tol) {
  Geodesic out;
  out.translate = g_z(z0, tol);
  out.base = geodesic_origin(DiskPoint(translate_to_origin(z0, z1, tol), tol), tol);
  return out;
}

DiskPoint exp0(const ComplexMatrix& v, const Tolerances& tol) {
  const PolarDecomposition p = polar(v, tol);
  return DiskPoint(p.omega * fun_calc(p.modulus, [](double t) { return std::tanh(t); }, tol), tol);
}

ComplexMatrix log0(const DiskPoint& z, const Tolerances& tol) {
  return alpha_of(z, tol);
}

DiskPoint exp_at(const DiskPoint& z0, const ComplexMatrix& v, const Tolerances& tol) {
  return mobius(g_z(z0, tol), exp0(v, tol), tol);
}

ComplexMatrix log_at(const DiskPoint& z0, const DiskPoint& z1, const Tolerances& tol) {
  return log0(DiskPoint(translate_to_origin(z0, z1, tol), tol), tol);
}

double dist(const DiskPoint& z1, const DiskPoint& z2, const Tolerances& tol) {
  const double s = op_norm(translate_to_origin(z1, z2, tol));
  return 0.5 * (std::log1p(s) - std::log1p(-s));
}

std::pair<BoundaryPoint, BoundaryPoint> limit_points(const DiskPoint& z0, const DiskPoint& z1,
                                                     const Tolerances& tol) {
  if (!(op_norm(z1.mat() - z0.mat()) > tol.eps_check)) {
    throw CoincidentPoints("limit_points: z0 and z1 coincide within eps_check");
  }
  const DiskPoint w(translate_to_origin(z0, z1, tol), tol);
  const ComplexMatrix omega0 = polar(alpha_of(w, tol), tol).omega;
  const BlockMatrix g = g_z(z0, tol);
  return {boundary_action(g, BoundaryPoint(-omega0, tol), tol),
          boundary_action(g, BoundaryPoint(omega0, tol), tol)};
}

BlockMatrix phi_D(const DiskPoint& a, const Tolerances& tol) {
  const Index n = a.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix z = a.mat();
  const ComplexMatrix i1 = inverse(id - z.adjoint() * z, tol);
  const ComplexMatrix i2 = inverse(id - z * z.adjoint(), tol);
  return {(id + z.adjoint() * z) * i1, -2.0 * z.adjoint() * i2,
          -2.0 * z * i1, (id + z * z.adjoint()) * i2};
}

DefectFactorization boundary_defect_factor(const BoundaryPoint& a, const Tolerances& tol) {
  const Index n = a.dim();
  const ComplexMatrix dm =
      ComplexMatrix::Identity(n, n) - a.mat().adjoint() * a.mat();
  const HermitianEig es = herm_eig(dm, tol);
  RealVector hq(n), qq(n);
  for (Index i = 0; i < n; ++i) {
    const double lam = std::max(es.eigenvalues[i], 0.0);
    if (lam > tol.eps_rank) {
      qq[i] = 1.0;
      hq[i] = std::sqrt(lam);
    } else {
      qq[i] = 0.0;
      hq[i] = std::sqrt(lam + 1.0);
    }
  }
  DefectFactorization out;
  out.h = es.eigenvectors * hq.asDiagonal() * es.eigenvectors.adjoint();
  out.q = es.eigenvectors * qq.asDiagonal() * es.eigenvectors.adjoint();
  return out;
}

}  // namespace opdisk
