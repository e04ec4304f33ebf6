#include "latmeans/json_io.hpp"

#include <fstream>
#include <sstream>

namespace latmeans::io {

using nlohmann::json;

namespace {

const json& vector_list(const json& j, std::string& field) {
  if (j.is_object()) {
    if (!j.contains("vectors")) throw JsonError("$", "expected an array or {\"vectors\": [...]}");
    field = "$.vectors";
    return j.at("vectors");
  }
  field = "$";
  return j;
}

double number_at(const json& j, const std::string& field) {
  if (!j.is_number()) throw JsonError(field, "expected a number");
  return j.get<double>();
}

std::size_t index_at(const json& j, const std::string& field) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw JsonError(field, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

int int_at(const json& obj, const char* key, const std::string& field) {
  if (!obj.contains(key)) throw JsonError(field + "." + key, "missing");
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) throw JsonError(field + "." + key, "expected an integer");
  return v.get<int>();
}

template <class Vec, class Parse>
std::vector<Vec> parse_list(const json& j, Parse parse) {
  std::string field;
  const json& list = vector_list(j, field);
  if (!list.is_array() || list.empty()) throw JsonError(field, "expected a nonempty array of vectors");
  std::vector<Vec> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string at = field + "[" + std::to_string(k) + "]";
    auto v = parse(list[k], at);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) throw JsonError(at + "[" + std::to_string(i) + "]", "entry must be >= 0");
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

}  // namespace

json to_json(const lattice::LatticeVector& v) { return json(v.to_vector()); }

json to_json(const lattice::RationalVector& v) {
  json out = json::array();
  for (const auto& x : v.entries()) out.push_back(format_rational(x));
  return out;
}

lattice::LatticeVector vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw JsonError(field, "expected a nonempty array of numbers");
  std::vector<double> x;
  x.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    x.push_back(number_at(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return lattice::LatticeVector(std::move(x));
}

lattice::RationalVector rational_vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw JsonError(field, "expected a nonempty array");
  std::vector<Rational> x;
  x.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = field + "[" + std::to_string(i) + "]";
    if (j[i].is_string()) {
      try {
        x.push_back(parse_rational(j[i].get<std::string>()));
      } catch (const InvalidArgument& e) {
        throw JsonError(at, e.what());
      }
    } else if (j[i].is_number_integer()) {
      x.emplace_back(j[i].get<long long>());
    } else {
      throw JsonError(at, "expected a \"p/q\" string or an integer");
    }
  }
  return lattice::RationalVector(std::move(x));
}

bool has_rational_entries(const json& j) {
  std::string field;
  const json& list = vector_list(j, field);
  if (!list.is_array()) return false;
  for (const auto& v : list) {
    if (!v.is_array()) continue;
    for (const auto& x : v) {
      if (x.is_string()) return true;
    }
  }
  return false;
}

std::vector<lattice::PositiveVector> positive_vectors_from_json(const json& j) {
  return parse_list<lattice::PositiveVector>(j, vector_from_json);
}

std::vector<lattice::PositiveRationalVector> positive_rational_vectors_from_json(const json& j) {
  return parse_list<lattice::PositiveRationalVector>(j, rational_vector_from_json);
}

json to_json(const poly::HomogeneousPolynomial& p) {
  json terms = json::array();
  for (const auto& [key, coeff] : p.terms()) terms.push_back({{"key", key}, {"coeff", coeff}});
  return {{"s", p.degree()}, {"n", p.domain_dim()}, {"d", p.codomain_dim()}, {"terms", terms}};
}

poly::HomogeneousPolynomial polynomial_from_json(const json& j) {
  if (!j.is_object()) throw JsonError("$", "expected a polynomial object");
  const int s = int_at(j, "s", "$");
  if (s < 1) throw JsonError("$.s", "degree must be >= 1");

  if (j.contains("diagonal")) {
    const auto& diag = j.at("diagonal");
    if (!diag.is_array() || diag.empty()) throw JsonError("$.diagonal", "expected a nonempty array");
    std::vector<std::vector<double>> c;
    for (std::size_t i = 0; i < diag.size(); ++i) {
      const std::string at = "$.diagonal[" + std::to_string(i) + "]";
      c.push_back(vector_from_json(diag[i], at).to_vector());
      if (c.back().size() != c.front().size()) throw JsonError(at, "coefficient length differs");
    }
    return poly::make_diagonal<double>(std::span<const std::vector<double>>(c), s);
  }

  const int n = int_at(j, "n", "$");
  const int d = j.contains("d") ? int_at(j, "d", "$") : 1;
  if (n < 1) throw JsonError("$.n", "must be >= 1");
  if (d < 1) throw JsonError("$.d", "must be >= 1");
  if (!j.contains("terms")) throw JsonError("$.terms", "missing");
  const auto& terms = j.at("terms");
  if (!terms.is_array()) throw JsonError("$.terms", "expected an array");

  std::vector<poly::Term<double>> parsed;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string at = "$.terms[" + std::to_string(t) + "]";
    const auto& term = terms[t];
    if (!term.is_object() || !term.contains("key") || !term.contains("coeff")) {
      throw JsonError(at, "expected {\"key\": [...], \"coeff\": [...]}");
    }
    const auto& key = term.at("key");
    if (!key.is_array()) throw JsonError(at + ".key", "expected an array of indices");
    if (key.size() != static_cast<std::size_t>(s)) {
      throw JsonError(at + ".key", "has length " + std::to_string(key.size()) + ", expected " +
                                       std::to_string(s));
    }
    poly::MultiIndex idx;
    for (std::size_t k = 0; k < key.size(); ++k) {
      const std::string kat = at + ".key[" + std::to_string(k) + "]";
      idx.push_back(index_at(key[k], kat));
      if (idx.back() >= static_cast<std::size_t>(n)) throw JsonError(kat, "index out of range");
    }
    const auto& coeff = term.at("coeff");
    std::vector<double> c;
    if (coeff.is_number()) {
      c.push_back(coeff.get<double>());
    } else {
      c = vector_from_json(coeff, at + ".coeff").to_vector();
    }
    if (c.size() != static_cast<std::size_t>(d)) {
      throw JsonError(at + ".coeff", "has length " + std::to_string(c.size()) + ", expected d = " +
                                         std::to_string(d));
    }
    parsed.push_back(poly::Term<double>{std::move(idx), std::move(c)});
  }
  return poly::HomogeneousPolynomial(s, static_cast<std::size_t>(n), static_cast<std::size_t>(d),
                                     std::move(parsed));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonError(path, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw JsonError(path, e.what());
  }
}

}  // namespace latmeans::io
