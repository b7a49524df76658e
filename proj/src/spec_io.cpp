#include "kneadgen/spec_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kneadgen/rational.hpp"

namespace kneadgen {

namespace {

using json = nlohmann::ordered_json;

std::size_t positive_size(const json& value, const char* name) {
  if (!value.is_number_unsigned() || value.get<std::uint64_t>() == 0) {
    throw SpecParseError(std::string(name) + " must be a positive integer");
  }
  return value.get<std::size_t>();
}

}  // namespace

RecurrenceSpec parse_spec_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecParseError(e.what());  // includes the byte position
  }
  if (!doc.is_object()) throw SpecParseError("top level must be a JSON object");
  for (const char* key : {"p", "s", "matrices"}) {
    if (!doc.contains(key)) throw SpecParseError(std::string("missing key \"") + key + "\"");
  }

  const std::size_t p = positive_size(doc["p"], "p");
  const std::size_t s = positive_size(doc["s"], "s");

  const json& matrices = doc["matrices"];
  if (!matrices.is_array()) throw SpecParseError("matrices must be an array");
  if (matrices.size() != s) {
    throw SpecParseError("expected " + std::to_string(s) + " matrices, found " +
                         std::to_string(matrices.size()));
  }

  std::vector<RationalMatrix> coeffs;
  coeffs.reserve(s);
  for (std::size_t k = 0; k < s; ++k) {
    const json& grid = matrices[k];
    const std::string where = "matrix " + std::to_string(k);
    if (!grid.is_array() || grid.size() != p) {
      throw SpecParseError(where + ": expected " + std::to_string(p) + " rows, found " +
                           std::to_string(grid.is_array() ? grid.size() : 0));
    }
    RationalMatrix matrix(p, p);
    for (std::size_t i = 0; i < p; ++i) {
      const json& row = grid[i];
      if (!row.is_array() || row.size() != p) {
        throw SpecParseError(where + ", row " + std::to_string(i) + ": expected " +
                             std::to_string(p) + " entries, found " +
                             std::to_string(row.is_array() ? row.size() : 0));
      }
      for (std::size_t j = 0; j < p; ++j) {
        if (!row[j].is_string()) {
          throw SpecParseError(where + ", entry (" + std::to_string(i) + "," +
                               std::to_string(j) + "): entries must be rational strings");
        }
        try {
          matrix(i, j) = parse_rational(row[j].get<std::string>());
        } catch (const std::invalid_argument& e) {
          throw SpecParseError(where + ", entry (" + std::to_string(i) + "," +
                               std::to_string(j) + "): " + e.what());
        }
      }
    }
    coeffs.push_back(std::move(matrix));
  }
  return RecurrenceSpec(p, s, std::move(coeffs));
}

RecurrenceSpec load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecParseError("cannot open spec file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_json(buffer.str());
}

std::string spec_to_json(const RecurrenceSpec& spec) {
  json matrices = json::array();
  for (const auto& matrix : spec.coefficients()) {
    json grid = json::array();
    for (std::size_t i = 0; i < spec.dimension(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < spec.dimension(); ++j) {
        row.push_back(rational_to_string(matrix(i, j)));
      }
      grid.push_back(std::move(row));
    }
    matrices.push_back(std::move(grid));
  }
  json doc;
  doc["p"] = spec.dimension();
  doc["s"] = spec.period();
  doc["matrices"] = std::move(matrices);
  return doc.dump();
}

}  // namespace kneadgen
