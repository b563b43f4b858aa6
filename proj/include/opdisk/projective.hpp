#pragma once

#include "opdisk/disk.hpp"

namespace opdisk {

/// Point of the hyperboloid K = { x in A^2 : theta(x,x) = 1, x1 invertible }.
class KPoint {
 public:
  explicit KPoint(PairVector x, const Tolerances& tol = {});
  const PairVector& pair() const { return x_; }
  Index dim() const { return x_.dim(); }

 private:
  PairVector x_;
};

/// Hyperbolic projective line, stored through a theta-normalized generator.
/// The generator is determined up to right multiplication by a unitary; the
/// induced disk point is a complete invariant and is cached.
class Line {
 public:
  explicit Line(const DiskPoint& z, const Tolerances& tol = {});
  explicit Line(KPoint generator, const Tolerances& tol = {});
  const KPoint& generator() const { return generator_; }
  const DiskPoint& point() const { return point_; }
  Index dim() const { return generator_.dim(); }

 private:
  KPoint generator_;
  DiskPoint point_;
};

/// True when both lines induce the same disk point within eps_check.
bool same_line(const Line& a, const Line& b, const Tolerances& tol = {});

/// Section of the fibration K -> D: z maps to ((1-z^*z)^{-1/2}, z(1-z^*z)^{-1/2}).
KPoint lift(const DiskPoint& z, const Tolerances& tol = {});

/// Fibration K -> D (defined whenever x1 is invertible): x maps to x2 x1^{-1}.
DiskPoint project(const PairVector& x, const Tolerances& tol = {});

/// Generator y0 = ((x1^*)^{-1} x2^*, 1) of the theta-orthocomplement of [x];
/// theta(x, y0) = 0 and theta(y0, y0) is negative invertible.
PairVector ortho_theta_generator(const KPoint& x, const Tolerances& tol = {});

/// Block projection onto a line along its theta-complement, as a matrix in the
/// symmetric space of theta-selfadjoint idempotents:
///   p = [ x1 x1^*  -x1 x2^* ; x2 x1^*  -x2 x2^* ]   (p y = x theta(x, y)).
class QProjection {
 public:
  explicit QProjection(BlockMatrix p, const Tolerances& tol = {});
  const BlockMatrix& block() const { return p_; }
  Index dim() const { return p_.dim(); }

 private:
  BlockMatrix p_;
};

QProjection q_projection(const Line& l, const Tolerances& tol = {});

/// Tangent vector at a line: a pair in the theta-orthocomplement of the
/// generator, checked on construction.
struct TangentVec {
  Line at;
  PairVector v;

  TangentVec(Line at_in, PairVector v_in, const Tolerances& tol = {});
};

/// Finsler length ||-theta(v, v)||^{1/2}; -theta(v,v) must be positive
/// semidefinite within eps_check.
double finsler_norm(const TangentVec& V, const Tolerances& tol = {});

/// True when theta(x,x) is positive invertible and x1 invertible, i.e. the
/// line through x meets the disk model.
bool is_hyperbolic(const PairVector& x, const Tolerances& tol = {});

/// Rescaling criterion: for x != 0, b = (inner(x,x)^+)^{1/2} (pseudo-inverse
/// square root) makes inner(x b, x b) an orthogonal projection.
struct RankOneCheck {
  bool holds;
  ComplexMatrix b;
};

RankOneCheck rank_one_projection_criterion(const PairVector& x, const Tolerances& tol = {});

}  // namespace opdisk
