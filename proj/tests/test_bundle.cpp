#include <doctest.h>

#include <cmath>

#include "opdisk/bundle.hpp"
#include "opdisk/rng.hpp"

using namespace opdisk;

namespace {

ComplexMatrix scalar(Complex v) {
  ComplexMatrix m(1, 1);
  m << v;
  return m;
}

DiskPoint dp(double v) { return DiskPoint(scalar(v)); }

DiskPoint diag_point(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return DiskPoint(std::move(m));
}

BlockMatrix commutator(const BlockMatrix& a, const BlockMatrix& b) {
  return a * b - b * a;
}

}  // namespace

TEST_SUITE("bundle") {

TEST_CASE("velocity block is the hermitian off-diagonal embedding") {
  SplitMix64 rng(61);
  const ComplexMatrix alpha = random_gaussian(rng, 3);
  const BlockMatrix m = velocity_block(alpha);
  CHECK(op_norm(m.g11) == 0.0);
  CHECK(op_norm(m.g22) == 0.0);
  CHECK(op_norm(m.g12 - alpha.adjoint()) == 0.0);
  CHECK(op_norm(m.g21 - alpha) == 0.0);
  CHECK(op_norm(m.to_dense() - m.to_dense().adjoint()) <= 1e-15);
  CHECK_THROWS_AS(velocity_block(ComplexMatrix::Zero(2, 3)), DimensionMismatch);
}

TEST_CASE("commutators with the base projection are admissible tangents") {
  SplitMix64 rng(62);
  const DiskPoint z = random_disk_point(rng, 2, 0.8);
  const QProjection q = q_projection(Line(z));
  const BlockMatrix m = velocity_block(random_gaussian(rng, 2));

  CHECK_NOTHROW(QTangent(q, commutator(m, q.block())));
  // the identity is rho-symmetric but not codiagonal
  CHECK_THROWS_AS(QTangent(q, BlockMatrix::identity(2)), NotTangent);
}

TEST_CASE("one-form and bundle inner product at the origin") {
  const Index n = 3;
  SplitMix64 rng(63);
  const ComplexMatrix alpha = random_gaussian(rng, n);
  const ComplexMatrix beta = random_gaussian(rng, n);
  const DiskPoint origin(ComplexMatrix::Zero(n, n));
  const KPoint x = lift(origin);

  const PairVector v = kappa(x, velocity_block(alpha));
  CHECK(op_norm(v.x1) <= 1e-14);
  CHECK(op_norm(v.x2 - alpha) <= 1e-14);

  const Endo gram = gamma_inner(velocity_block(alpha), velocity_block(beta), x);
  CHECK(op_norm(gram.coefficient - alpha.adjoint() * beta) <= 1e-12);
  CHECK(is_positive_invertible(
      ComplexMatrix(gamma_inner(velocity_block(alpha), velocity_block(alpha), x)
                        .coefficient)));

  CHECK_THROWS_AS(kappa(x, BlockMatrix::identity(n)), NotTangent);
}

TEST_CASE("origin logarithm modulus has frozen scalar value") {
  const Endo e = mod0_log(dp(0.5));
  CHECK(op_norm(e.coefficient - scalar(std::log(3.0))) <= 1e-13);
  CHECK(op_norm(e.line.point().mat()) <= 1e-15);
}

TEST_CASE("transport to the origin fixes the identity and frozen diagonals") {
  SplitMix64 rng(64);
  const DiskPoint z = random_disk_point(rng, 3, 0.85);
  const Endo identity{Line(z), ComplexMatrix::Identity(3, 3)};
  const Endo moved = transport_to_origin(z, identity);
  CHECK(op_norm(moved.coefficient - ComplexMatrix::Identity(3, 3)) <= 1e-11);

  CHECK(op_norm(transport_to_origin(dp(0.5), cr0(dp(0.5))).coefficient -
                scalar(3.0)) <= 1e-11);

  const DiskPoint d = diag_point(0.5, 0.8);
  ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
  expected(0, 0) = 3.0;
  expected(1, 1) = 9.0;
  CHECK(op_norm(transport_to_origin(d, cr0(d)).coefficient - expected) <= 1e-10);
}

TEST_CASE("transport rejects endomorphisms based elsewhere") {
  SplitMix64 rng(65);
  const DiskPoint z = random_disk_point(rng, 2, 0.8);
  const DiskPoint other = random_disk_point(rng, 2, 0.8);
  CHECK_THROWS_AS(transport_to_origin(z, cr0(other)), BaseMismatch);
}

TEST_CASE("exponential identity between transported cross ratio and log modulus") {
  CHECK(verify_el_teo(dp(0.5)) <= 1e-12);

  SplitMix64 rng(66);
  for (int rep = 0; rep < 10; ++rep) {
    const DiskPoint z = random_disk_point(rng, 3, 0.9);
    CHECK(verify_el_teo(z) <= 1e-9);
  }
}

TEST_CASE("translated identity including the norm equality") {
  CHECK(verify_coro(dp(0.5), dp(0.8)) <= 1e-10);

  SplitMix64 rng(67);
  for (int rep = 0; rep < 10; ++rep) {
    const DiskPoint z0 = random_disk_point(rng, 2, 0.85);
    const DiskPoint z1 = random_disk_point(rng, 2, 0.85);
    CHECK(verify_coro(z0, z1) <= 1e-9);
  }
  const DiskPoint z = random_disk_point(rng, 2, 0.8);
  CHECK_THROWS_AS(verify_coro(z, z), CoincidentPoints);
}

}  // TEST_SUITE
