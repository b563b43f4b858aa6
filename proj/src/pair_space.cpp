#include "opdisk/pair_space.hpp"

namespace opdisk {

namespace {

void require_same_dim(Index a, Index b, const char* who) {
  if (a != b) {
    throw DimensionMismatch(std::string(who) + ": dimensions " + std::to_string(a) +
                            " and " + std::to_string(b) + " differ");
  }
}

}  // namespace

PairVector operator*(const PairVector& x, const ComplexMatrix& a) {
  require_same_dim(x.dim(), a.rows(), "PairVector*matrix");
  return {x.x1 * a, x.x2 * a};
}

PairVector operator+(const PairVector& x, const PairVector& y) {
  require_same_dim(x.dim(), y.dim(), "PairVector+PairVector");
  return {x.x1 + y.x1, x.x2 + y.x2};
}

PairVector operator-(const PairVector& x, const PairVector& y) {
  require_same_dim(x.dim(), y.dim(), "PairVector-PairVector");
  return {x.x1 - y.x1, x.x2 - y.x2};
}

double pair_norm(const PairVector& x) {
  return std::max(op_norm(x.x1), op_norm(x.x2));
}

ComplexMatrix BlockMatrix::to_dense() const {
  const Index n = dim();
  ComplexMatrix m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = g11;
  m.topRightCorner(n, n) = g12;
  m.bottomLeftCorner(n, n) = g21;
  m.bottomRightCorner(n, n) = g22;
  return m;
}

BlockMatrix BlockMatrix::adjoint() const {
  return {g11.adjoint(), g21.adjoint(), g12.adjoint(), g22.adjoint()};
}

BlockMatrix BlockMatrix::identity(Index n) {
  return {ComplexMatrix::Identity(n, n), ComplexMatrix::Zero(n, n),
          ComplexMatrix::Zero(n, n), ComplexMatrix::Identity(n, n)};
}

BlockMatrix BlockMatrix::rho(Index n) {
  return {ComplexMatrix::Identity(n, n), ComplexMatrix::Zero(n, n),
          ComplexMatrix::Zero(n, n), -ComplexMatrix::Identity(n, n)};
}

BlockMatrix BlockMatrix::diag(ComplexMatrix u1, ComplexMatrix u2) {
  const Index n = u1.rows();
  require_same_dim(n, u2.rows(), "BlockMatrix::diag");
  return {std::move(u1), ComplexMatrix::Zero(n, n), ComplexMatrix::Zero(n, n), std::move(u2)};
}

BlockMatrix BlockMatrix::from_dense(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) {
    throw DimensionMismatch("BlockMatrix::from_dense: expected square even-dimensional matrix");
  }
  const Index n = m.rows() / 2;
  return {m.topLeftCorner(n, n), m.topRightCorner(n, n),
          m.bottomLeftCorner(n, n), m.bottomRightCorner(n, n)};
}

BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "BlockMatrix*BlockMatrix");
  return {a.g11 * b.g11 + a.g12 * b.g21, a.g11 * b.g12 + a.g12 * b.g22,
          a.g21 * b.g11 + a.g22 * b.g21, a.g21 * b.g12 + a.g22 * b.g22};
}

PairVector operator*(const BlockMatrix& g, const PairVector& x) {
  require_same_dim(g.dim(), x.dim(), "BlockMatrix*PairVector");
  return {g.g11 * x.x1 + g.g12 * x.x2, g.g21 * x.x1 + g.g22 * x.x2};
}

BlockMatrix operator+(const BlockMatrix& a, const BlockMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "BlockMatrix+BlockMatrix");
  return {a.g11 + b.g11, a.g12 + b.g12, a.g21 + b.g21, a.g22 + b.g22};
}

BlockMatrix operator-(const BlockMatrix& a, const BlockMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "BlockMatrix-BlockMatrix");
  return {a.g11 - b.g11, a.g12 - b.g12, a.g21 - b.g21, a.g22 - b.g22};
}

double block_norm(const BlockMatrix& g) {
  return op_norm(g.to_dense());
}

ComplexMatrix inner(const PairVector& x, const PairVector& y) {
  require_same_dim(x.dim(), y.dim(), "inner");
  return x.x1.adjoint() * y.x1 + x.x2.adjoint() * y.x2;
}

ComplexMatrix theta(const PairVector& x, const PairVector& y) {
  require_same_dim(x.dim(), y.dim(), "theta");
  return x.x1.adjoint() * y.x1 - x.x2.adjoint() * y.x2;
}

bool is_regular(const PairVector& x, const Tolerances& tol) {
  return is_positive_invertible(inner(x, x), tol);
}

bool is_theta_unitary(const BlockMatrix& g, const Tolerances& tol) {
  const Index n = g.dim();
  const BlockMatrix rho = BlockMatrix::rho(n);
  const double defect = block_norm(g.adjoint() * rho * g - rho);
  if (!(defect <= tol.eps_check)) return false;
  return min_singular_value(g.to_dense()) > tol.eps_rank;
}

BlockMatrix theta_unitary_inverse(const BlockMatrix& g, const Tolerances& tol) {
  if (!is_theta_unitary(g, tol)) {
    throw NotThetaUnitary("theta_unitary_inverse: argument is not a theta isometry");
  }
  return {g.g11.adjoint(), -g.g21.adjoint(), -g.g12.adjoint(), g.g22.adjoint()};
}

BorelParams::BorelParams(ComplexMatrix g_in, ComplexMatrix x_in, const Tolerances& tol)
    : g(std::move(g_in)), x(std::move(x_in)) {
  if (g.rows() != g.cols() || x.rows() != x.cols()) {
    throw DimensionMismatch("BorelParams: parameters must be square");
  }
  require_same_dim(g.rows(), x.rows(), "BorelParams");
  if (!(min_singular_value(g) > tol.eps_rank)) {
    throw SingularG("BorelParams: g is singular at eps_rank");
  }
  const double defect = op_norm(x + x.adjoint());
  if (!(defect <= tol.eps_check)) {
    throw NotAntiHermitian("BorelParams: ||x + x^*|| = " + std::to_string(defect));
  }
}

BlockMatrix borel_element(const BorelParams& p, const Tolerances& tol) {
  const ComplexMatrix gh = inverse(p.g.adjoint(), tol);
  const ComplexMatrix h = 0.5 * (p.g + gh);
  const ComplexMatrix k = 0.5 * (p.g - gh);
  const ComplexMatrix m = gh * p.x;
  return {h - m, k - m, k + m, h + m};
}

BorelParams borel_factor(const BlockMatrix& b, const Tolerances& tol) {
  const ComplexMatrix g = 0.5 * (b.g11 + b.g12 + b.g21 + b.g22);
  if (!(min_singular_value(g) > tol.eps_rank)) {
    throw NotBorel("borel_factor: recovered g is singular");
  }
  const ComplexMatrix gh = inverse(g.adjoint(), tol);
  const ComplexMatrix x = g.adjoint() * (b.g21 - 0.5 * (g - gh));
  const double skew_defect = op_norm(x + x.adjoint());
  if (!(skew_defect <= tol.eps_check)) {
    throw NotBorel("borel_factor: recovered x is not anti-Hermitian, ||x + x^*|| = " +
                   std::to_string(skew_defect));
  }
  const BorelParams p(g, x, tol);
  const double recon = block_norm(borel_element(p, tol) - b);
  if (!(recon <= tol.eps_check * std::max(1.0, block_norm(b)))) {
    throw NotBorel("borel_factor: reconstruction residual " + std::to_string(recon));
  }
  return p;
}

}  // namespace opdisk
