#include "msym/json_io.hpp"

#include "msym/error.hpp"

namespace msym {

using nlohmann::json;

namespace {

std::string coeff_string(const Coeff& c) { return Ring::format(c); }

json exponent_array(std::span<const Exponent> e) { return json(std::vector<Exponent>(e.begin(), e.end())); }

std::size_t read_size(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
    throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  }
  return j.at(key).get<std::size_t>();
}

}  // namespace

MsfElement element_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("element must be a JSON object");
  Ambient ambient = Ambient::infinite();
  if (!j.contains("n")) throw ParseError("missing field 'n'");
  const json& jn = j.at("n");
  if (jn.is_string() && jn.get<std::string>() == "inf") {
    ambient = Ambient::infinite();
  } else if (jn.is_number_unsigned() && jn.get<std::size_t>() >= 1) {
    ambient = Ambient::finite(jn.get<std::size_t>());
  } else {
    throw ParseError("field 'n' must be a positive integer or \"inf\"");
  }
  const std::size_t m = read_size(j, "m");
  if (m == 0) throw ParseError("m must be positive");
  if (!j.contains("ring") || !j.at("ring").is_string()) throw ParseError("field 'ring' must be a string");
  const Ring ring = Ring::parse(j.at("ring").get<std::string>());
  if (!j.contains("terms") || !j.at("terms").is_array()) throw ParseError("field 'terms' must be an array");

  MsfElement x(ambient, m, ring);
  for (const auto& term : j.at("terms")) {
    if (!term.is_object() || !term.contains("alpha") || !term.at("alpha").is_array()) {
      throw ParseError("each term needs an 'alpha' array");
    }
    std::vector<AlphaEntry> entries;
    for (const auto& e : term.at("alpha")) {
      if (!e.is_object() || !e.contains("mono") || !e.at("mono").is_array()) throw ParseError("alpha entry needs 'mono'");
      std::vector<Exponent> exps;
      for (const auto& v : e.at("mono")) {
        if (!v.is_number_unsigned()) throw ParseError("monomial exponents must be non-negative integers");
        exps.push_back(v.get<Exponent>());
      }
      if (exps.size() != m) throw ParseError("monomial length differs from m");
      entries.push_back({Monomial(std::move(exps)), static_cast<std::uint32_t>(read_size(e, "mult"))});
    }
    Coeff c(1);
    if (term.contains("coeff")) {
      const json& jc = term.at("coeff");
      if (jc.is_string()) {
        c = ring.parse_coeff(jc.get<std::string>());
      } else if (jc.is_number_integer()) {
        c = ring.parse_coeff(std::to_string(jc.get<long long>()));
      } else {
        throw ParseError("coeff must be a string or an integer");
      }
    }
    try {
      x.add_term(AlphaIndex::from_entries(m, std::move(entries)), c);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    } catch (const VanishingIndex& e) {
      throw ParseError(e.what());
    }
  }
  return x;
}

MsfElement element_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return element_from_json(j);
}

json to_json(const AlphaIndex& alpha) {
  json arr = json::array();
  const auto support = alpha.support();
  for (auto it = support.rbegin(); it != support.rend(); ++it) arr.push_back({{"mono", exponent_array(it->mono.exponents())}, {"mult", it->mult}});
  return arr;
}

json to_json(const Multidegree& a) { return exponent_array(a.entries()); }

json to_json(const MsfElement& x) {
  json terms = json::array();
  for (const auto& [alpha, c] : x.terms()) terms.push_back({{"alpha", to_json(alpha)}, {"coeff", coeff_string(c)}});
  json n = x.ambient().is_finite() ? json(x.ambient().size()) : json("inf");
  return {{"n", n}, {"m", x.m()}, {"ring", x.ring().to_string()}, {"terms", terms}};
}

template <class Alphabet>
json to_json(const SymbolPoly<Alphabet>& g) {
  json terms = json::array();
  for (const auto& [mono, c] : g.terms()) {
    json factors = json::array();
    for (const auto& [sym, p] : mono.factors()) {
      factors.push_back({{"order", sym.order}, {"mono", exponent_array(sym.mono.exponents())}, {"power", p}});
    }
    terms.push_back({{"coeff", coeff_string(c)}, {"factors", factors}});
  }
  return {{"ring", g.ring().to_string()}, {"m", g.m()}, {"text", g.to_string()}, {"terms", terms}};
}

template json to_json(const SymbolPoly<AnyMonomialSymbols>&);
template json to_json(const SymbolPoly<PrimitiveSymbols>&);

json to_json(const NPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"exponents", exponent_array(it->first.exponents())}, {"coeff", coeff_string(it->second)}});
  }
  return {{"n", p.n()}, {"m", p.m()}, {"ring", p.ring().to_string()}, {"text", p.to_string()}, {"terms", terms}};
}

}  // namespace msym
