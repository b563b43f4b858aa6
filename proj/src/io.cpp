#include "opdisk/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace opdisk {

namespace {

Eigen::MatrixXd real_part_from_json(const Json& j, const char* key, Index n) {
  if (!j.contains(key) || !j[key].is_array() || static_cast<Index>(j[key].size()) != n) {
    throw ParseError(std::string("matrix: '") + key + "' must be an array of " +
                     std::to_string(n) + " rows");
  }
  Eigen::MatrixXd m(n, n);
  for (Index i = 0; i < n; ++i) {
    const Json& row = j[key][static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      throw ParseError(std::string("matrix: row ") + std::to_string(i) + " of '" + key +
                       "' must have " + std::to_string(n) + " entries");
    }
    for (Index k = 0; k < n; ++k) {
      const Json& v = row[static_cast<std::size_t>(k)];
      if (!v.is_number()) {
        throw ParseError(std::string("matrix: non-numeric entry in '") + key + "'");
      }
      m(i, k) = v.get<double>();
      if (!std::isfinite(m(i, k))) {
        throw ParseError(std::string("matrix: non-finite entry in '") + key + "'");
      }
    }
  }
  return m;
}

const Json& require_key(const Json& j, const char* key, const char* who) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string(who) + ": missing key '" + key + "'");
  }
  return j[key];
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  const Index n = m.rows();
  Json re = Json::array();
  Json im = Json::array();
  for (Index i = 0; i < n; ++i) {
    Json rrow = Json::array();
    Json irow = Json::array();
    for (Index k = 0; k < n; ++k) {
      rrow.push_back(m(i, k).real());
      irow.push_back(m(i, k).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  return Json{{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix: expected a JSON object");
  const Json& nj = require_key(j, "n", "matrix");
  if (!nj.is_number_integer() || nj.get<Index>() < 1 || nj.get<Index>() > 1024) {
    throw ParseError("matrix: 'n' must be an integer in [1, 1024]");
  }
  const Index n = nj.get<Index>();
  const Eigen::MatrixXd re = real_part_from_json(j, "re", n);
  const Eigen::MatrixXd im = real_part_from_json(j, "im", n);
  return re.cast<Complex>() + Complex(0, 1) * im.cast<Complex>();
}

Json pair_to_json(const PairVector& x) {
  return Json{{"x1", matrix_to_json(x.x1)}, {"x2", matrix_to_json(x.x2)}};
}

PairVector pair_from_json(const Json& j) {
  return {matrix_from_json(require_key(j, "x1", "pair")),
          matrix_from_json(require_key(j, "x2", "pair"))};
}

Json block_to_json(const BlockMatrix& g) {
  return Json{{"g11", matrix_to_json(g.g11)},
              {"g12", matrix_to_json(g.g12)},
              {"g21", matrix_to_json(g.g21)},
              {"g22", matrix_to_json(g.g22)}};
}

BlockMatrix block_from_json(const Json& j) {
  return {matrix_from_json(require_key(j, "g11", "block matrix")),
          matrix_from_json(require_key(j, "g12", "block matrix")),
          matrix_from_json(require_key(j, "g21", "block matrix")),
          matrix_from_json(require_key(j, "g22", "block matrix"))};
}

Json line_to_json(const Line& l) {
  return Json{{"z", matrix_to_json(l.point().mat())},
              {"generator", pair_to_json(l.generator().pair())}};
}

Line line_from_json(const Json& j, const Tolerances& tol) {
  if (j.is_object() && j.contains("generator")) {
    return Line(KPoint(pair_from_json(j["generator"]), tol), tol);
  }
  return Line(DiskPoint(matrix_from_json(require_key(j, "z", "line")), tol), tol);
}

Json endo_to_json(const Endo& e) {
  return Json{{"line", line_to_json(e.line)},
              {"coefficient", matrix_to_json(e.coefficient)},
              {"basis", "K_theta"}};
}

Endo endo_from_json(const Json& j, const Tolerances& tol) {
  const Json& basis = require_key(j, "basis", "endomorphism");
  if (!basis.is_string() || basis.get<std::string>() != "K_theta") {
    throw ParseError("endomorphism: 'basis' must be \"K_theta\"");
  }
  return {line_from_json(require_key(j, "line", "endomorphism"), tol),
          matrix_from_json(require_key(j, "coefficient", "endomorphism"))};
}

Json block_element_to_json(const BlockAlgebra& algebra, const ComplexMatrix& m) {
  Json blocks = Json::array();
  for (Index d : algebra.block_dims) blocks.push_back(d);
  return Json{{"blocks", std::move(blocks)}, {"data", matrix_to_json(m)}};
}

std::pair<BlockAlgebra, ComplexMatrix> block_element_from_json(const Json& j) {
  const Json& blocks = require_key(j, "blocks", "block element");
  if (!blocks.is_array() || blocks.empty()) {
    throw ParseError("block element: 'blocks' must be a non-empty array");
  }
  std::vector<Index> dims;
  for (const Json& b : blocks) {
    if (!b.is_number_integer() || b.get<Index>() < 1) {
      throw ParseError("block element: block dimensions must be positive integers");
    }
    dims.push_back(b.get<Index>());
  }
  BlockAlgebra algebra(std::move(dims));
  ComplexMatrix data = matrix_from_json(require_key(j, "data", "block element"));
  if (data.rows() != algebra.total_dim()) {
    throw ParseError("block element: data dimension does not match the block pattern");
  }
  return {std::move(algebra), std::move(data)};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
}

ComplexMatrix load_matrix_file(const std::string& path) {
  return matrix_from_json(load_json_file(path));
}

void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open file for writing: " + path);
  out << text;
  if (!out) throw Error("failed writing file: " + path);
}

}  // namespace opdisk
