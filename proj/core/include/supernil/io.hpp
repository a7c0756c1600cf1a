#pragma once

#include <string>

#include "supernil/superalgebra.hpp"

namespace supernil {

/// Algebra file format: a JSON object {"n", "m", "conductor", "brackets"}
/// where brackets is a list of {"left": "x1", "right": "y2", "value":
/// [{"basis": "x3", "coeff": "<scalar literal>"}]}. Pairs not listed multiply
/// to zero. Scalar literals use the grammar of Scalar::parse with z the
/// primitive root for the declared conductor.

/// Parses algebra JSON text. Throws ParseError on malformed JSON, schema
/// violations, bad basis names, and bad scalar literals; table-level
/// violations (grading, duplicate pairs, index range) surface from the
/// SuperAlgebra constructor with the offending entry named.
SuperAlgebra algebra_from_json(const std::string& text);

/// Serializes deterministically: table rows in basis order, value entries in
/// coordinate order, zero coordinates omitted.
std::string algebra_to_json(const SuperAlgebra& a);

SuperAlgebra load_algebra(const std::string& path);
void save_algebra(const SuperAlgebra& a, const std::string& path);

}  // namespace supernil
