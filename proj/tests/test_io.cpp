#include <doctest.h>

#include <cstdio>
#include <string>

#include "opdisk/io.hpp"
#include "opdisk/rng.hpp"

using namespace opdisk;

namespace {

ComplexMatrix scalar(Complex v) {
  ComplexMatrix m(1, 1);
  m << v;
  return m;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("matrix json round-trip is bit exact") {
  SplitMix64 rng(81);
  const ComplexMatrix m = random_gaussian(rng, 4);
  const Json j = Json::parse(matrix_to_json(m).dump());
  const ComplexMatrix back = matrix_from_json(j);
  REQUIRE(back.rows() == 4);
  for (Index i = 0; i < 4; ++i) {
    for (Index k = 0; k < 4; ++k) {
      CHECK(back(i, k) == m(i, k));
    }
  }
}

TEST_CASE("matrix json validation") {
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[]")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"re":[[1]],"im":[[0]]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"n":0,"re":[],"im":[]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"n":2,"re":[[1,2]],"im":[[0,0],[0,0]]})")),
                  ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"n":1,"re":[["x"]],"im":[[0]]})")),
                  ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"n":1,"re":[[null]],"im":[[0]]})")),
                  ParseError);
}

TEST_CASE("pair and block round-trips") {
  SplitMix64 rng(82);
  const PairVector x{random_gaussian(rng, 2), random_gaussian(rng, 2)};
  const PairVector px = pair_from_json(pair_to_json(x));
  CHECK(op_norm(px.x1 - x.x1) == 0.0);
  CHECK(op_norm(px.x2 - x.x2) == 0.0);
  CHECK_THROWS_AS(pair_from_json(Json::parse(R"({"x1": 3})")), ParseError);

  const BlockMatrix g = random_theta_unitary(rng, 2);
  const BlockMatrix pg = block_from_json(block_to_json(g));
  CHECK(block_norm(pg - g) == 0.0);
}

TEST_CASE("line and endomorphism round-trips") {
  const DiskPoint z(scalar(0.5));
  const Line l(z);
  const Line parsed = line_from_json(line_to_json(l));
  CHECK(same_line(parsed, l));

  // a bare point is also accepted
  const Line from_z = line_from_json(Json{{"z", matrix_to_json(z.mat())}});
  CHECK(same_line(from_z, l));

  const Endo e = cr0(z);
  const Endo pe = endo_from_json(endo_to_json(e));
  CHECK(op_norm(pe.coefficient - e.coefficient) == 0.0);
  CHECK(same_line(pe.line, e.line));

  Json wrong_basis = endo_to_json(e);
  wrong_basis["basis"] = "other";
  CHECK_THROWS_AS(endo_from_json(wrong_basis), ParseError);
}

TEST_CASE("block element round-trip and validation") {
  const BlockAlgebra algebra({2, 1});
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 1) = Complex(1, -2);
  m(2, 2) = 5.0;
  const auto [back_algebra, back_m] = block_element_from_json(block_element_to_json(algebra, m));
  CHECK(back_algebra.block_dims == algebra.block_dims);
  CHECK(op_norm(back_m - m) == 0.0);

  Json bad = block_element_to_json(algebra, m);
  bad["blocks"] = Json::array({2, 2});
  CHECK_THROWS_AS(block_element_from_json(bad), ParseError);
  bad["blocks"] = Json::array();
  CHECK_THROWS_AS(block_element_from_json(bad), ParseError);
}

TEST_CASE("file helpers round-trip and surface errors") {
  const std::string path = "/tmp/opdisk_io_test.json";
  const ComplexMatrix m = scalar(Complex(0.25, -1.5));
  save_text_file(path, matrix_to_json(m).dump());
  const ComplexMatrix back = load_matrix_file(path);
  CHECK(back(0, 0) == m(0, 0));
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_json_file("/tmp/opdisk_definitely_missing.json"), ParseError);
  save_text_file(path, "{not json");
  CHECK_THROWS_AS(load_json_file(path), ParseError);
  std::remove(path.c_str());
}

}  // TEST_SUITE
