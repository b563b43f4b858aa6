#include <doctest.h>

#include "opdisk/pair_space.hpp"
#include "opdisk/rng.hpp"

using namespace opdisk;

namespace {

ComplexMatrix scalar(Complex v) {
  ComplexMatrix m(1, 1);
  m << v;
  return m;
}

PairVector random_pair(SplitMix64& rng, Index n) {
  return {random_gaussian(rng, n), random_gaussian(rng, n)};
}

BlockMatrix random_block(SplitMix64& rng, Index n) {
  return {random_gaussian(rng, n), random_gaussian(rng, n),
          random_gaussian(rng, n), random_gaussian(rng, n)};
}

}  // namespace

TEST_SUITE("pair_space") {

TEST_CASE("module action and pairings at scalar values") {
  const PairVector x{scalar(2), scalar(1)};
  const PairVector y{scalar(1), scalar(1)};
  CHECK(inner(x, x)(0, 0).real() == doctest::Approx(5.0));
  CHECK(theta(x, x)(0, 0).real() == doctest::Approx(3.0));
  CHECK(theta(x, y)(0, 0).real() == doctest::Approx(1.0));

  const PairVector xa = x * scalar(Complex(0, 1));
  CHECK(xa.x1(0, 0) == Complex(0, 2));
  CHECK(xa.x2(0, 0) == Complex(0, 1));
  CHECK(pair_norm(x) == doctest::Approx(2.0));

  const PairVector sum = x + y;
  CHECK(sum.x1(0, 0).real() == doctest::Approx(3.0));
  const PairVector diff = x - y;
  CHECK(diff.x2(0, 0).real() == doctest::Approx(0.0));
}

TEST_CASE("pairings are sesquilinear and adjoint-symmetric") {
  SplitMix64 rng(11);
  const PairVector x = random_pair(rng, 3);
  const PairVector y = random_pair(rng, 3);
  const ComplexMatrix a = random_gaussian(rng, 3);

  CHECK(op_norm(theta(x, y).adjoint() - theta(y, x)) <= 1e-13);
  CHECK(op_norm(inner(x, y).adjoint() - inner(y, x)) <= 1e-13);
  CHECK(op_norm(theta(x, y * a) - theta(x, y) * a) <= 1e-12);
  CHECK(op_norm(theta(x * a, y) - a.adjoint() * theta(x, y)) <= 1e-12);
}

TEST_CASE("block matrices round-trip through the dense realization") {
  SplitMix64 rng(12);
  const BlockMatrix g = random_block(rng, 3);
  const BlockMatrix h = random_block(rng, 3);
  const PairVector x = random_pair(rng, 3);

  const BlockMatrix back = BlockMatrix::from_dense(g.to_dense());
  CHECK(op_norm(back.g11 - g.g11) == 0.0);
  CHECK(op_norm(back.g22 - g.g22) == 0.0);

  CHECK(op_norm((g * h).to_dense() - g.to_dense() * h.to_dense()) <= 1e-12);
  CHECK(op_norm(g.adjoint().to_dense() - g.to_dense().adjoint()) <= 1e-15);
  CHECK(block_norm(g) == doctest::Approx(op_norm(g.to_dense())));

  const PairVector gx = g * x;
  ComplexMatrix stacked(6, 3);
  stacked.topRows(3) = x.x1;
  stacked.bottomRows(3) = x.x2;
  const ComplexMatrix dense_gx = g.to_dense() * stacked;
  CHECK(op_norm(gx.x1 - dense_gx.topRows(3)) <= 1e-12);
  CHECK(op_norm(gx.x2 - dense_gx.bottomRows(3)) <= 1e-12);

  CHECK_THROWS_AS(BlockMatrix::from_dense(ComplexMatrix::Zero(3, 3)), DimensionMismatch);
}

TEST_CASE("signature matrix squares to the identity") {
  const BlockMatrix rho = BlockMatrix::rho(2);
  CHECK(block_norm(rho * rho - BlockMatrix::identity(2)) == 0.0);
  CHECK(rho.to_dense()(0, 0) == Complex(1, 0));
  CHECK(rho.to_dense()(2, 2) == Complex(-1, 0));
}

TEST_CASE("theta isometries: membership, inverse, composition") {
  SplitMix64 rng(13);
  const BlockMatrix g = random_theta_unitary(rng, 3);
  const BlockMatrix h = random_theta_unitary(rng, 3);

  CHECK(is_theta_unitary(g));
  CHECK(is_theta_unitary(BlockMatrix::identity(3)));
  CHECK(is_theta_unitary(BlockMatrix::rho(3)));
  CHECK(is_theta_unitary(g * h));

  const BlockMatrix ginv = theta_unitary_inverse(g);
  CHECK(block_norm(g * ginv - BlockMatrix::identity(3)) <= 1e-9);
  CHECK(block_norm(ginv * g - BlockMatrix::identity(3)) <= 1e-9);

  // scaled identity preserves no indefinite form
  BlockMatrix bad = BlockMatrix::identity(3);
  bad.g11 *= 2.0;
  CHECK_FALSE(is_theta_unitary(bad));
  CHECK_THROWS_AS(theta_unitary_inverse(bad), NotThetaUnitary);
}

TEST_CASE("regularity of pairs") {
  const PairVector good{scalar(2), scalar(1)};
  CHECK(is_regular(good));
  const PairVector zero{scalar(0), scalar(0)};
  CHECK_FALSE(is_regular(zero));
}

TEST_CASE("triangular element at hand-checked scalar parameters") {
  // g = 2, x = i/2: gh = 1/2, h = 5/4, k = 3/4, m = i/4
  const BorelParams p(scalar(2), scalar(Complex(0, 0.5)));
  const BlockMatrix b = borel_element(p);
  CHECK(std::abs(b.g11(0, 0) - Complex(1.25, -0.25)) <= 1e-15);
  CHECK(std::abs(b.g12(0, 0) - Complex(0.75, -0.25)) <= 1e-15);
  CHECK(std::abs(b.g21(0, 0) - Complex(0.75, 0.25)) <= 1e-15);
  CHECK(std::abs(b.g22(0, 0) - Complex(1.25, 0.25)) <= 1e-15);
  CHECK(is_theta_unitary(b));

  const BorelParams back = borel_factor(b);
  CHECK(op_norm(back.g - p.g) <= 1e-12);
  CHECK(op_norm(back.x - p.x) <= 1e-12);
}

TEST_CASE("triangular parameter validation") {
  CHECK_THROWS_AS(BorelParams(scalar(0), scalar(0)), SingularG);
  CHECK_THROWS_AS(BorelParams(scalar(1), scalar(1)), NotAntiHermitian);
  CHECK_THROWS_AS(BorelParams(ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(3, 3)),
                  DimensionMismatch);
}

TEST_CASE("triangular factorization round-trips and is closed under products") {
  SplitMix64 rng(14);
  for (int rep = 0; rep < 10; ++rep) {
    const BorelParams p(random_invertible(rng, 3), random_antihermitian(rng, 3));
    const BlockMatrix b = borel_element(p);
    CHECK(is_theta_unitary(b));
    const BorelParams back = borel_factor(b);
    CHECK(op_norm(back.g - p.g) <= 1e-9);
    CHECK(op_norm(back.x - p.x) <= 1e-9);
  }
  const BorelParams p1(random_invertible(rng, 2), random_antihermitian(rng, 2));
  const BorelParams p2(random_invertible(rng, 2), random_antihermitian(rng, 2));
  CHECK_NOTHROW(borel_factor(borel_element(p1) * borel_element(p2)));
}

TEST_CASE("factorization rejects isometries outside the triangular subgroup") {
  // diag(i, 1) is a theta isometry but not triangular
  const BlockMatrix g = BlockMatrix::diag(scalar(Complex(0, 1)), scalar(1));
  CHECK(is_theta_unitary(g));
  CHECK_THROWS_AS(borel_factor(g), NotBorel);
}

}  // TEST_SUITE
