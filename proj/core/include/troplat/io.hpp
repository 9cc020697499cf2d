#pragma once

#include <string>

#include "json.hpp"
#include "troplat/oracle.hpp"
#include "troplat/polyhedral.hpp"
#include "troplat/tropical.hpp"

namespace troplat {

using Json = nlohmann::ordered_json;

/// On-disk form of a lattice matrix: Puiseux expression strings, row major.
struct MatrixDocument {
  int n = 0, r = 0;
  std::vector<std::vector<std::string>> rows;
  std::string label;

  LatticeMatrix to_matrix() const;
  static MatrixDocument from_matrix(const LatticeMatrix& m, const std::string& label = "");
};

Json to_json(const MatrixDocument& doc);
MatrixDocument matrix_document_from_json(const Json& j);
MatrixDocument load_matrix_document(const std::string& path);

Json entropy_to_json(const EntropyVector& h);
EntropyVector entropy_from_json(const Json& j);

Json generators_to_json(const GeneratorSet& gens, int n);
GeneratorSet generators_from_json(const Json& j, int n);

Json point_to_json(const TropicalPoint& p);
TropicalPoint point_from_json(const Json& j);
/// Comma-separated rationals: "0,1,-3/2".
TropicalPoint parse_point(const std::string& text);

Json bimatroid_to_json(const BimatroidTable& nu);

/// Complex document: h, cells with active keys, labels, exact H-reps, face
/// ids and optional V-reps; round-trips losslessly.
Json complex_to_json(const Complex& complex, const EntropyVector& h, bool sigma_only,
                     bool with_vrep);
Complex complex_from_json(const Json& j);

Json witness_to_json(const Witness& w, int n);

}  // namespace troplat
