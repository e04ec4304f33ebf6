#pragma once

// JSON encodings.
//   vector:      [1.5, 2, 0]              (exact mode: ["3/2", "2/1", "0/1"])
//   vector list: [[...], [...]] or {"vectors": [[...], [...]]}
//   polynomial:  {"s": 2, "n": 2, "d": 1,
//                 "terms": [{"key": [0, 1], "coeff": [1.0]}, ...]}
//                or the diagonal shortcut {"s": 2, "diagonal": [[c_0], [c_1]]}
// Polynomial keys are 0-based coordinate indices.

#include "json.hpp"
#include "latmeans/errors.hpp"
#include "latmeans/lattice.hpp"
#include "latmeans/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace latmeans::io {

/// Malformed JSON input. what() names the offending field.
class JsonError : public InvalidArgument {
 public:
  JsonError(const std::string& field, const std::string& problem)
      : InvalidArgument("invalid JSON at " + field + ": " + problem), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

nlohmann::json to_json(const lattice::LatticeVector& v);
nlohmann::json to_json(const lattice::RationalVector& v);

lattice::LatticeVector vector_from_json(const nlohmann::json& j, const std::string& field);
lattice::RationalVector rational_vector_from_json(const nlohmann::json& j,
                                                  const std::string& field);

/// True when any entry of the vector list is a string (exact-rational input).
bool has_rational_entries(const nlohmann::json& list);

/// Accepts a bare array of vectors or an object with a "vectors" array.
std::vector<lattice::PositiveVector> positive_vectors_from_json(const nlohmann::json& j);
std::vector<lattice::PositiveRationalVector> positive_rational_vectors_from_json(
    const nlohmann::json& j);

nlohmann::json to_json(const poly::HomogeneousPolynomial& p);
poly::HomogeneousPolynomial polynomial_from_json(const nlohmann::json& j);

/// Reads and parses a file; JsonError with field "<path>" on failure.
nlohmann::json read_json_file(const std::string& path);

}  // namespace latmeans::io
