#pragma once

#include <string>

#include <json.hpp>

#include "opdisk/cross_ratio.hpp"
#include "opdisk/trace_algebra.hpp"

namespace opdisk {

using Json = nlohmann::json;

/// Matrix schema: {"n": int, "re": [[row-major reals]], "im": [[row-major reals]]}.
/// Doubles are serialized with shortest round-trip decimal form, so parse of a
/// dump is bit-exact.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// Pair schema: {"x1": matrix, "x2": matrix}.
Json pair_to_json(const PairVector& x);
PairVector pair_from_json(const Json& j);

/// Block schema: {"g11": matrix, "g12": matrix, "g21": matrix, "g22": matrix}.
Json block_to_json(const BlockMatrix& g);
BlockMatrix block_from_json(const Json& j);

/// Line schema: {"z": matrix, "generator": pair} (generator optional on parse).
Json line_to_json(const Line& l);
Line line_from_json(const Json& j, const Tolerances& tol = {});

/// Endomorphism schema: {"line": line, "coefficient": matrix, "basis": "K_theta"}.
Json endo_to_json(const Endo& e);
Endo endo_from_json(const Json& j, const Tolerances& tol = {});

/// Block-algebra element schema: {"blocks": [dims], "data": matrix}.
Json block_element_to_json(const BlockAlgebra& algebra, const ComplexMatrix& m);
std::pair<BlockAlgebra, ComplexMatrix> block_element_from_json(const Json& j);

/// Whole-file helpers; all parse failures surface as ParseError.
Json load_json_file(const std::string& path);
ComplexMatrix load_matrix_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

}  // namespace opdisk
