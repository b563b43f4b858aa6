#include "opdisk/trace_algebra.hpp"

#include <numeric>

namespace opdisk {

BlockAlgebra::BlockAlgebra(std::vector<Index> dims) : block_dims(std::move(dims)) {
  if (block_dims.empty()) {
    throw ConfigError("BlockAlgebra: at least one block required");
  }
  for (Index d : block_dims) {
    if (d < 1) throw ConfigError("BlockAlgebra: block dimensions must be positive");
  }
}

Index BlockAlgebra::total_dim() const {
  return std::accumulate(block_dims.begin(), block_dims.end(), Index{0});
}

bool BlockAlgebra::is_member(const ComplexMatrix& m, const Tolerances& tol) const {
  const Index n = total_dim();
  if (m.rows() != n || m.cols() != n) return false;
  ComplexMatrix off = m;
  Index at = 0;
  for (Index d : block_dims) {
    off.block(at, at, d, d).setZero();
    at += d;
  }
  return off.cwiseAbs().maxCoeff() <= tol.eps_check;
}

void BlockAlgebra::require_member(const ComplexMatrix& m, const Tolerances& tol) const {
  if (!is_member(m, tol)) {
    throw BlockPatternViolation("matrix does not respect the block pattern");
  }
}

ComplexMatrix central_trace(const BlockAlgebra& algebra, const ComplexMatrix& x,
                            const Tolerances& tol) {
  algebra.require_member(x, tol);
  ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
  Index at = 0;
  for (Index d : algebra.block_dims) {
    const Complex tau = x.block(at, at, d, d).trace() / static_cast<double>(d);
    out.block(at, at, d, d) = tau * ComplexMatrix::Identity(d, d);
    at += d;
  }
  return out;
}

namespace {

void require_diagonal(const ComplexMatrix& m, const Tolerances& tol, const char* who) {
  ComplexMatrix off = m;
  off.diagonal().setZero();
  if (off.cwiseAbs().maxCoeff() > tol.eps_check) {
    throw NotDiagonal(std::string(who) + ": matrix has off-diagonal entries");
  }
}

}  // namespace

double verify_commutative(const DiskPoint& z0, const DiskPoint& z1, const Tolerances& tol) {
  require_diagonal(z0.mat(), tol, "verify_commutative");
  require_diagonal(z1.mat(), tol, "verify_commutative");
  if (!(op_norm(z1.mat() - z0.mat()) > tol.eps_check)) {
    throw CoincidentPoints("verify_commutative: z0 and z1 coincide within eps_check");
  }
  const ComplexMatrix c = cr(z0, z1, tol).coefficient;
  const ComplexMatrix lhs =
      fun_calc(hermitian_part(c), [](double t) { return std::log(t); }, tol);
  const ComplexMatrix modulus = polar(log_at(z0, z1, tol), tol).modulus;
  return op_norm(lhs - 2.0 * modulus);
}

double verify_tracial(const BlockAlgebra& algebra, const DiskPoint& z0,
                      const DiskPoint& z1, const Tolerances& tol) {
  algebra.require_member(z0.mat(), tol);
  algebra.require_member(z1.mat(), tol);
  if (!(op_norm(z1.mat() - z0.mat()) > tol.eps_check)) {
    throw CoincidentPoints("verify_tracial: z0 and z1 coincide within eps_check");
  }
  const DiskPoint w(translate_to_origin(z0, z1, tol), tol);
  const ComplexMatrix transported =
      transport_to_origin(w, cr0(w, tol), tol).coefficient;
  const ComplexMatrix log_cr = fun_calc(hermitian_part(transported),
      [](double t) { return std::log(t); }, tol);
  const ComplexMatrix modulus = polar(alpha_of(w, tol), tol).modulus;
  const ComplexMatrix lhs = central_trace(algebra, log_cr, tol);
  const ComplexMatrix rhs = central_trace(algebra, 2.0 * modulus, tol);
  return op_norm(lhs - rhs);
}

}  // namespace opdisk
