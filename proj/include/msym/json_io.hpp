#pragma once

#include "msym/msf.hpp"
#include "msym/polynomial.hpp"
#include "msym/relations.hpp"
#include "msym/rewrite.hpp"

#include <json.hpp>

#include <string>

namespace msym {

/// {"n": 3 | "inf", "m": 2, "ring": "Z", "terms": [{"alpha": [{"mono": [1,0], "mult": 2}], "coeff": "1"}]}
/// Throws ParseError on malformed input (including weight > n).
MsfElement element_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MsfElement& x);

nlohmann::json to_json(const AlphaIndex& alpha);
nlohmann::json to_json(const Multidegree& a);

/// {"ring": "Z", "m": 2, "text": "...", "terms": [{"coeff": "-1", "factors": [{"order": 1, "mono": [1,0], "power": 1}]}]}
template <class Alphabet>
nlohmann::json to_json(const SymbolPoly<Alphabet>& g);

/// {"n": 2, "m": 2, "ring": "Z", "text": "...", "terms": [{"exponents": [...], "coeff": "1"}]}
nlohmann::json to_json(const NPoly& p);

/// Parses a file's contents; wraps JSON syntax errors as ParseError.
MsfElement element_from_string(const std::string& text);

}  // namespace msym
