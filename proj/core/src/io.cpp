#include "supernil/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "supernil/errors.hpp"

namespace supernil {

namespace {

using nlohmann::ordered_json;

long require_integer(const ordered_json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw ParseError(std::string("algebra file misses the '") + key + "' field");
  }
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) {
    throw ParseError(std::string("algebra field '") + key + "' must be an integer");
  }
  return v.get<long>();
}

std::string require_string(const ordered_json& obj, const char* key,
                           const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_string()) {
    throw ParseError("expected string field '" + std::string(key) + "' in " + where);
  }
  return obj.at(key).get<std::string>();
}

}  // namespace

SuperAlgebra algebra_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("algebra file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("algebra file must hold a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "m" && key != "conductor" && key != "brackets") {
      throw ParseError("unknown algebra field '" + key + "'");
    }
  }

  const long n = require_integer(doc, "n");
  const long m = require_integer(doc, "m");
  const long conductor = require_integer(doc, "conductor");
  if (n < 0 || m < 0) throw ParseError("dimensions must be nonnegative");
  if (conductor < 1) throw ParseError("conductor must be a positive integer");

  if (!doc.contains("brackets") || !doc.at("brackets").is_array()) {
    throw ParseError("algebra file needs a 'brackets' array");
  }

  std::vector<BracketEntry> entries;
  for (const auto& row : doc.at("brackets")) {
    if (!row.is_object()) throw ParseError("bracket rows must be JSON objects");
    for (const auto& [key, value] : row.items()) {
      if (key != "left" && key != "right" && key != "value") {
        throw ParseError("unknown bracket field '" + key + "'");
      }
    }
    const BasisIndex left = parse_basis_name(require_string(row, "left", "bracket row"));
    const BasisIndex right = parse_basis_name(require_string(row, "right", "bracket row"));
    const std::string where = "[" + left.name() + ", " + right.name() + "]";
    if (!row.contains("value") || !row.at("value").is_array()) {
      throw ParseError("bracket " + where + " needs a 'value' array");
    }
    GradedVector value(static_cast<unsigned>(n), static_cast<unsigned>(m),
                       static_cast<unsigned>(conductor));
    for (const auto& part : row.at("value")) {
      if (!part.is_object()) {
        throw ParseError("value entries of " + where + " must be JSON objects");
      }
      for (const auto& [key, item] : part.items()) {
        if (key != "basis" && key != "coeff") {
          throw ParseError("unknown value field '" + key + "' in " + where);
        }
      }
      const BasisIndex basis =
          parse_basis_name(require_string(part, "basis", "value of " + where));
      const unsigned bound =
          basis.parity == Parity::Even ? static_cast<unsigned>(n) : static_cast<unsigned>(m);
      if (basis.index < 1 || basis.index > bound) {
        throw ParseError("basis " + basis.name() + " in " + where +
                         " is outside the declared dimensions");
      }
      auto& slot = basis.parity == Parity::Even ? value.even[basis.index - 1]
                                                : value.odd[basis.index - 1];
      if (!slot.is_zero()) {
        throw ParseError("basis " + basis.name() + " listed twice in " + where);
      }
      slot = Scalar::parse(require_string(part, "coeff", "value of " + where),
                           static_cast<unsigned>(conductor));
    }
    entries.push_back({left, right, value});
  }
  return SuperAlgebra(static_cast<unsigned>(n), static_cast<unsigned>(m),
                      static_cast<unsigned>(conductor), entries);
}

std::string algebra_to_json(const SuperAlgebra& a) {
  ordered_json doc;
  doc["n"] = a.even_dim();
  doc["m"] = a.odd_dim();
  doc["conductor"] = a.conductor();
  doc["brackets"] = ordered_json::array();
  for (const auto& [key, value] : a.table()) {
    ordered_json row;
    row["left"] = key.first.name();
    row["right"] = key.second.name();
    row["value"] = ordered_json::array();
    auto emit = [&row](const std::vector<Scalar>& block, Parity p) {
      for (unsigned i = 0; i < block.size(); ++i) {
        if (block[i].is_zero()) continue;
        row["value"].push_back(
            {{"basis", BasisIndex{p, i + 1}.name()}, {"coeff", block[i].str()}});
      }
    };
    emit(value.even, Parity::Even);
    emit(value.odd, Parity::Odd);
    doc["brackets"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

SuperAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open algebra file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return algebra_from_json(buffer.str());
}

void save_algebra(const SuperAlgebra& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write algebra file '" + path + "'");
  out << algebra_to_json(a);
  if (!out) throw ParseError("failed writing algebra file '" + path + "'");
}

}  // namespace supernil
