#include "opdisk/cross_ratio.hpp"

namespace opdisk {

namespace {

// Solve p.lhs + q.mu = target over the coefficient pair (lhs, mu), as one
// dense 2n x 2n system acting on n right-hand columns.
struct ProjectionSolution {
  ComplexMatrix onto;      // coefficient of p
  ComplexMatrix parallel;  // coefficient of q
};

ProjectionSolution solve_projection(const PairVector& p, const PairVector& q,
                                    const PairVector& target, const Tolerances& tol,
                                    bool allow_nonunique) {
  const Index n = p.dim();
  ComplexMatrix m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = p.x1;
  m.topRightCorner(n, n) = q.x1;
  m.bottomLeftCorner(n, n) = p.x2;
  m.bottomRightCorner(n, n) = q.x2;
  ComplexMatrix rhs(2 * n, n);
  rhs.topRows(n) = target.x1;
  rhs.bottomRows(n) = target.x2;

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m.adjoint() * m);
  const RealVector svals = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  ComplexMatrix u;
  if (svals.minCoeff() > tol.eps_rank) {
    u = m.partialPivLu().solve(rhs);
  } else if (allow_nonunique) {
    // minimal-norm solution through the pseudo-inverse (m^* m)^+ m^*
    RealVector pinv(svals.size());
    for (Index i = 0; i < svals.size(); ++i) {
      pinv[i] = svals[i] > tol.eps_rank ? 1.0 / (svals[i] * svals[i]) : 0.0;
    }
    u = es.eigenvectors() * pinv.asDiagonal() * es.eigenvectors().adjoint() *
        (m.adjoint() * rhs);
  } else {
    throw NoSolution("cross_ratio_set: projection system is rank-deficient "
                     "(pass allow_nonunique to accept the minimal-norm solution)");
  }

  const double residual = op_norm(m * u - rhs);
  if (!(residual <= tol.eps_check * std::max(1.0, op_norm(rhs)))) {
    throw NoSolution("cross_ratio_set: projection system inconsistent, residual " +
                     std::to_string(residual));
  }
  return {u.topRows(n), u.bottomRows(n)};
}

}  // namespace

double endo_norm(const Endo& e) {
  return op_norm(e.coefficient);
}

Endo cr0(const DiskPoint& z, const Tolerances& tol) {
  const PolarDecomposition p = polar(z.mat(), tol);
  const ComplexMatrix c =
      fun_calc(p.modulus, [](double t) { return (1.0 + t) / (1.0 - t); }, tol);
  return {Line(z, tol), c};
}

Endo cr(const DiskPoint& z0, const DiskPoint& z1, const Tolerances& tol) {
  if (!(op_norm(z1.mat() - z0.mat()) > tol.eps_check)) {
    throw CoincidentPoints("cr: z0 and z1 coincide within eps_check");
  }
  const BlockMatrix g = g_z(z0, tol);
  const DiskPoint w(mobius_apply(theta_unitary_inverse(g, tol), z1.mat(), tol), tol);
  const Endo base = cr0(w, tol);
  const PairVector pushed = g * base.line.generator().pair();
  const Line target(z1, tol);
  const ComplexMatrix u = theta(target.generator().pair(), pushed);
  return {target, u * base.coefficient * u.adjoint()};
}

FourLines::FourLines(ComplexMatrix a1_in, ComplexMatrix a2_in, ComplexMatrix a3_in,
                     ComplexMatrix a4_in, const Tolerances& tol)
    : a1(std::move(a1_in)), a2(std::move(a2_in)), a3(std::move(a3_in)), a4(std::move(a4_in)) {
  const ComplexMatrix* as[] = {&a1, &a2, &a3, &a4};
  for (const ComplexMatrix* a : as) {
    if (a->rows() != a->cols() || a->rows() != a1.rows()) {
      throw DimensionMismatch("FourLines: generators must be square of equal dimension");
    }
    if (!(op_norm(*a) <= 1.0 + tol.eps_check)) {
      throw NotInDisk("FourLines: generator (1, a) requires ||a|| <= 1");
    }
  }
}

FourLines geodesic_tuple(const DiskPoint& z, const Tolerances& tol) {
  const PolarDecomposition p = polar(z.mat(), tol);
  if (p.rank < z.dim()) {
    throw SingularMatrix("geodesic_tuple: z must be invertible");
  }
  return FourLines(-p.omega, ComplexMatrix::Zero(z.dim(), z.dim()), z.mat(), p.omega, tol);
}

Endo cross_ratio_set(const FourLines& f, const Tolerances& tol, bool allow_nonunique) {
  const Index n = f.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const PairVector x1{id, f.a1}, x2{id, f.a2}, x3{id, f.a3}, x4{id, f.a4};

  // eta: line(a3) -> line(a2) parallel to line(a1); then
  // psi: line(a2) -> line(a3) parallel to line(a4).  Composition on x3 has
  // coefficient gamma . lambda.
  const ProjectionSolution eta = solve_projection(x2, x1, x3, tol, allow_nonunique);
  const ProjectionSolution psi = solve_projection(x3, x4, x2, tol, allow_nonunique);
  const ComplexMatrix c = psi.onto * eta.onto;

  // Rebase from the generator (1, a3) to the theta-normalized lift: with
  // x3 = lift(z3) . s, s = (1 - a3^* a3)^{1/2}, the coefficient conjugates by s.
  const DiskPoint z3 = project(x3, tol);
  const ComplexMatrix s = sqrt_psd(id - f.a3.adjoint() * f.a3, tol);
  return {Line(z3, tol), s * c * inverse(s, tol)};
}

}  // namespace opdisk
