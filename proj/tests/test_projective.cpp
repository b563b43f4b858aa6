#include <doctest.h>

#include "opdisk/projective.hpp"
#include "opdisk/rng.hpp"

using namespace opdisk;

namespace {

ComplexMatrix scalar(Complex v) {
  ComplexMatrix m(1, 1);
  m << v;
  return m;
}

DiskPoint dp(double v) { return DiskPoint(scalar(v)); }

}  // namespace

TEST_SUITE("projective") {

TEST_CASE("lift lands on the hyperboloid; frozen scalar components") {
  const KPoint x = lift(dp(0.5));
  // (1 - 1/4)^{-1/2} = 2/sqrt(3), and half of it
  CHECK(std::abs(x.pair().x1(0, 0) - Complex(1.1547005383792515)) <= 1e-14);
  CHECK(std::abs(x.pair().x2(0, 0) - Complex(0.5773502691896258)) <= 1e-14);

  SplitMix64 rng(41);
  for (Index n : {Index(1), Index(2), Index(4)}) {
    const DiskPoint z = random_disk_point(rng, n, 0.9);
    const KPoint k = lift(z);
    CHECK(op_norm(theta(k.pair(), k.pair()) - ComplexMatrix::Identity(n, n)) <= 1e-10);
    CHECK(op_norm(project(k.pair()).mat() - z.mat()) <= 1e-12);
  }
}

TEST_CASE("hyperboloid membership is validated") {
  CHECK_THROWS_AS(KPoint({scalar(2), scalar(0)}), NotOnHyperboloid);
  CHECK_THROWS_AS(KPoint({scalar(1), ComplexMatrix::Zero(2, 2)}), DimensionMismatch);
  CHECK_NOTHROW(KPoint({scalar(1), scalar(0)}));
}

TEST_CASE("projection requires an invertible first component") {
  PairVector x{ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2)};
  x.x1(0, 0) = 1.0;  // rank one
  CHECK_THROWS_AS(project(x), SingularFirstComponent);
}

TEST_CASE("lines are generator classes with the disk point as invariant") {
  SplitMix64 rng(42);
  const DiskPoint z = random_disk_point(rng, 3, 0.8);
  const Line from_point(z);
  const Line from_generator(from_point.generator());
  CHECK(same_line(from_point, from_generator));

  // right-rescaling the generator by a unitary keeps the line
  const ComplexMatrix u = random_unitary(rng, 3);
  const Line rescaled(KPoint(from_point.generator().pair() * u));
  CHECK(same_line(from_point, rescaled));

  const DiskPoint other = random_disk_point(rng, 3, 0.8);
  CHECK_FALSE(same_line(from_point, Line(other)));
}

TEST_CASE("orthocomplement generator pairs to zero and is negative") {
  SplitMix64 rng(43);
  const DiskPoint z = random_disk_point(rng, 3, 0.85);
  const KPoint x = lift(z);
  const PairVector y0 = ortho_theta_generator(x);
  CHECK(op_norm(theta(x.pair(), y0)) <= 1e-10);
  // theta(y0, y0) = z z^* - 1
  const ComplexMatrix expected =
      z.mat() * z.mat().adjoint() - ComplexMatrix::Identity(3, 3);
  CHECK(op_norm(theta(y0, y0) - expected) <= 1e-10);
  CHECK(is_positive_invertible(ComplexMatrix(-theta(y0, y0))));
}

TEST_CASE("block projection: frozen scalar entries and projection identities") {
  const QProjection p = q_projection(Line(dp(0.5)));
  // outer products of (2/sqrt(3), 1/sqrt(3)) scaled by 1/0.75
  CHECK(std::abs(p.block().g11(0, 0) - Complex(4.0 / 3.0)) <= 1e-13);
  CHECK(std::abs(p.block().g12(0, 0) - Complex(-2.0 / 3.0)) <= 1e-13);
  CHECK(std::abs(p.block().g21(0, 0) - Complex(2.0 / 3.0)) <= 1e-13);
  CHECK(std::abs(p.block().g22(0, 0) - Complex(-1.0 / 3.0)) <= 1e-13);

  SplitMix64 rng(44);
  const DiskPoint z = random_disk_point(rng, 3, 0.85);
  const Line l(z);
  const QProjection q = q_projection(l);
  // fixes the generator, annihilates the orthocomplement
  const PairVector x = l.generator().pair();
  const PairVector qx = q.block() * x;
  CHECK(op_norm(qx.x1 - x.x1) <= 1e-10);
  CHECK(op_norm(qx.x2 - x.x2) <= 1e-10);
  const PairVector y0 = ortho_theta_generator(l.generator());
  CHECK(pair_norm(q.block() * y0) <= 1e-10);
}

TEST_CASE("positive embedding equals the signed projection form") {
  SplitMix64 rng(45);
  for (Index n : {Index(1), Index(2), Index(4)}) {
    const DiskPoint z = random_disk_point(rng, n, 0.85);
    const QProjection q = q_projection(Line(z));
    const BlockMatrix two_q_minus_1 =
        q.block() + q.block() - BlockMatrix::identity(n);
    const BlockMatrix expected = BlockMatrix::rho(n) * two_q_minus_1;
    CHECK(block_norm(phi_D(z) - expected) <= 1e-9);
  }
}

TEST_CASE("projection validation rejects non-projections") {
  // the identity is idempotent and rho-selfadjoint, but rho(2-1) = rho is
  // not positive
  CHECK_THROWS_AS(QProjection{BlockMatrix::identity(2)}, NotProjection);
  BlockMatrix half = BlockMatrix::identity(2);
  half.g11 *= 0.5;
  CHECK_THROWS_AS(QProjection{half}, NotProjection);
}

TEST_CASE("tangent vectors at the origin line and the Finsler norm") {
  const Index n = 3;
  const DiskPoint origin(ComplexMatrix::Zero(n, n));
  const Line l(origin);
  SplitMix64 rng(46);
  const ComplexMatrix a = random_gaussian(rng, n);

  // at the origin the orthocomplement is the second coordinate axis
  const TangentVec v(l, {ComplexMatrix::Zero(n, n), a});
  CHECK(finsler_norm(v) == doctest::Approx(op_norm(a)).epsilon(1e-12));

  CHECK_THROWS_AS(TangentVec(l, {ComplexMatrix::Identity(n, n), a}), NotTangent);
}

TEST_CASE("hyperbolicity of pairs") {
  CHECK(is_hyperbolic(lift(dp(0.5)).pair()));
  CHECK_FALSE(is_hyperbolic({scalar(1), scalar(2)}));       // negative form
  PairVector singular{ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2)};
  singular.x1(0, 0) = 1.0;
  CHECK_FALSE(is_hyperbolic(singular));                     // singular x1
}

TEST_CASE("rescaling criterion produces a projection-compatible normalizer") {
  SplitMix64 rng(47);
  const PairVector x{random_gaussian(rng, 3), random_gaussian(rng, 3)};
  const RankOneCheck full = rank_one_projection_criterion(x);
  CHECK(full.holds);
  const ComplexMatrix p = full.b.adjoint() * inner(x, x) * full.b;
  CHECK(op_norm(p - ComplexMatrix::Identity(3, 3)) <= 1e-10);

  // rank-deficient pair: the normalized product is the support projection
  PairVector partial{ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2)};
  partial.x1(0, 0) = 2.0;
  const RankOneCheck deficient = rank_one_projection_criterion(partial);
  CHECK(deficient.holds);
  ComplexMatrix support = ComplexMatrix::Zero(2, 2);
  support(0, 0) = 1.0;
  CHECK(op_norm(deficient.b.adjoint() * inner(partial, partial) * deficient.b -
                support) <= 1e-12);

  const PairVector zero{ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2)};
  CHECK_THROWS_AS(rank_one_projection_criterion(zero), ZeroVector);
}

}  // TEST_SUITE
