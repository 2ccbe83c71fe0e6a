#pragma once

#include <string>

#include <json.hpp>

#include "pquant/operators.hpp"
#include "pquant/polynomial.hpp"
#include "pquant/symbol.hpp"
#include "pquant/vector_field.hpp"

namespace pquant {

using Json = nlohmann::json;

// Canonical JSON. Objects have sorted keys, rationals are "num/den"
// strings, wedge indices are 1-based, and terms appear in the canonical
// order of the underlying maps, so equal values print byte-identically.
//
//   Poly        [{"coef", "x"}]
//   Symbol      {"n", "p", "terms": [{"coef", "wedge", "x", "xi"}]}
//   DiffOp      {"n", "p", "terms": [{"alpha", "coef": Poly, "wedge"}]}
//   PForm       {"n", "p", "terms": [{"coef": Poly, "wedge"}]}
//   VectorField {"components": [Poly], "n"}
//
// Readers throw ParseError on any schema violation, including unknown keys.

Json to_json(const Poly& p);
Json to_json(const Symbol& s);
Json to_json(const DiffOp& d);
Json to_json(const PForm& f);
Json to_json(const VectorField& x);

Poly poly_from_json(const Json& j, int n);
Symbol symbol_from_json(const Json& j);
DiffOp diffop_from_json(const Json& j);
PForm pform_from_json(const Json& j);
VectorField vector_field_from_json(const Json& j);

/// Two-space indented text with a trailing newline.
std::string canonical_dump(const Json& j);
/// Parses text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

}  // namespace pquant
