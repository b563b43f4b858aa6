#pragma once

#include "opdisk/projective.hpp"

namespace opdisk {

/// Module endomorphism of a line, stored as its coefficient matrix in the
/// theta-normalized basis: phi(generator) = generator . coefficient.
/// Under the basis change generator -> generator u the coefficient transforms
/// as u^* coefficient u.
struct Endo {
  Line line;
  ComplexMatrix coefficient;
};

/// Operator norm of the endomorphism (norm of the coefficient in a
/// theta-normalized basis; invariant under unitary basis change).
double endo_norm(const Endo& e);

/// Canonical cross ratio of the geodesic configuration through 0 and z: the
/// endomorphism of the line of z with coefficient (1+|z|)(1-|z|)^{-1}.
/// For z = 0 returns the identity endomorphism (continuous extension).
Endo cr0(const DiskPoint& z, const Tolerances& tol = {});

/// Translated cross ratio: the origin configuration of w = g_z(z0)^{-1}.z1
/// pushed forward by g_z(z0); an endomorphism of the line of z1, independent
/// of the transitive element used.
Endo cr(const DiskPoint& z0, const DiskPoint& z1, const Tolerances& tol = {});

/// Four lines spanned by generators (1, a_i) with ||a_i|| <= 1 (interior or
/// boundary).  Solvability of the cross-ratio systems requires the lines in
/// each projection step to be distinct; duplicates surface as NoSolution.
struct FourLines {
  ComplexMatrix a1, a2, a3, a4;

  FourLines(ComplexMatrix a1_in, ComplexMatrix a2_in, ComplexMatrix a3_in,
            ComplexMatrix a4_in, const Tolerances& tol = {});
  Index dim() const { return a1.rows(); }
};

/// Geodesic four-tuple (-omega, 0, z, +omega) of an invertible disk point.
FourLines geodesic_tuple(const DiskPoint& z, const Tolerances& tol = {});

/// Cross ratio of four lines via two parallel projections: first the line of
/// a3 is projected onto the line of a2 parallel to the line of a1, then back
/// onto the line of a3 parallel to the line of a4.  The composition is an
/// endomorphism of the line of a3, returned in its theta-normalized basis.
/// Throws NoSolution when a projection system is rank-deficient (unless
/// allow_nonunique selects the minimal-norm solution) or inconsistent.
Endo cross_ratio_set(const FourLines& f, const Tolerances& tol = {},
                     bool allow_nonunique = false);

}  // namespace opdisk
