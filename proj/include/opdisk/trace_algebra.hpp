#pragma once

#include <vector>

#include "opdisk/bundle.hpp"

namespace opdisk {

/// Direct sum of full matrix blocks inside M_n; its center is one scalar per
/// block, and the central trace is the per-block normalized trace.
struct BlockAlgebra {
  std::vector<Index> block_dims;

  explicit BlockAlgebra(std::vector<Index> dims);
  Index total_dim() const;
  /// True when all entries outside the block pattern are below eps_check.
  bool is_member(const ComplexMatrix& m, const Tolerances& tol = {}) const;
  /// Throws BlockPatternViolation when is_member fails.
  void require_member(const ComplexMatrix& m, const Tolerances& tol = {}) const;
};

/// Conditional expectation onto the center: per block, (trace / dim) times the
/// block identity.  Idempotent and trace-preserving per block.
ComplexMatrix central_trace(const BlockAlgebra& algebra, const ComplexMatrix& x,
                            const Tolerances& tol = {});

/// Residual of the diagonal-algebra identity
///   log(coefficient of cr(z0,z1)) = 2 |log_at(z0, z1)|
/// for diagonal disk points (elementwise classical hyperbolic geometry).
double verify_commutative(const DiskPoint& z0, const DiskPoint& z1,
                          const Tolerances& tol = {});

/// Residual of the central-trace identity
///   tr(log transported cross-ratio coefficient) = 2 tr(|log0(w)|)
/// for block-algebra disk points, w the translate of z1 to the origin.
double verify_tracial(const BlockAlgebra& algebra, const DiskPoint& z0,
                      const DiskPoint& z1, const Tolerances& tol = {});

}  // namespace opdisk
