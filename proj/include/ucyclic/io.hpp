#pragma once

// Serialization: field elements as bare lowercase hex, ring elements as
// "a:b" pairs, code specs as flat JSON records with the generators expanded.
// Output is byte-deterministic: nlohmann::json keeps object keys sorted.

#include <string>
#include <vector>

#include <json.hpp>

#include "codes.hpp"
#include "gray.hpp"
#include "oracle.hpp"

namespace ucyclic {

inline std::string to_hex(std::uint32_t v) {
  if (v == 0) return "0";
  static const char* digits = "0123456789abcdef";
  std::string out;
  while (v) {
    out.insert(out.begin(), digits[v & 0xf]);
    v >>= 4;
  }
  return out;
}

inline std::string ring_elem_str(RingElem e) {
  return to_hex(e.a) + ":" + to_hex(e.b);
}

inline std::uint32_t from_hex(const std::string& s) {
  if (s.empty() || s.size() > 8) throw SpecMismatch("bad hex field element: " + s);
  std::uint32_t v = 0;
  for (char ch : s) {
    int d;
    if (ch >= '0' && ch <= '9') d = ch - '0';
    else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
    else throw SpecMismatch("bad hex field element: " + s);
    v = (v << 4) | static_cast<std::uint32_t>(d);
  }
  return v;
}

// A polynomial travels as its coefficient list in the (x+1)-adic basis,
// lowest power first, plus the modulus exponent so truncation survives a
// round trip even when the leading coefficients are zero.
inline nlohmann::json ypoly_record(const YPoly& p) {
  nlohmann::json rec;
  nlohmann::json cj = nlohmann::json::array();
  for (Fq v : p.coeffs()) cj.push_back(to_hex(v));
  rec["coeffs"] = cj;
  rec["l"] = p.modulus_exp();
  return rec;
}

inline YPoly ypoly_from_record(FieldPtr field, const nlohmann::json& rec) {
  if (!rec.is_object() || !rec.contains("coeffs") || !rec.contains("l") ||
      !rec["coeffs"].is_array() || !rec["l"].is_number_integer() ||
      rec["l"].get<long long>() < 0)
    throw SpecMismatch("malformed polynomial record");
  unsigned l = rec["l"].get<unsigned>();
  if (rec["coeffs"].size() != l)
    throw ModulusMismatch("record 'l' disagrees with coefficient count");
  std::vector<Fq> c;
  c.reserve(l);
  for (const auto& item : rec["coeffs"]) {
    if (!item.is_string()) throw SpecMismatch("malformed polynomial record");
    c.push_back(static_cast<Fq>(from_hex(item.get<std::string>())));
  }
  return YPoly(std::move(field), std::move(c));
}

inline nlohmann::json code_record(const CodeSpec& spec) {
  CodeSpec c = as_case(spec);
  nlohmann::json rec;
  rec["family"] = family_name(c.family);
  rec["s"] = c.s;
  rec["m"] = c.field->degree();
  rec["modulus"] = "0x" + to_hex(c.field->modulus());
  rec["k"] = c.k;
  rec["t"] = c.t;
  nlohmann::json bj = nlohmann::json::array();
  if (c.b)
    for (Fq v : c.b->coeffs()) bj.push_back(to_hex(v));
  rec["b"] = bj;
  nlohmann::json gens = nlohmann::json::array();
  for (const RingVec& g : generators(c)) {
    nlohmann::json gj = nlohmann::json::array();
    for (std::size_t i = 0; i < g.size(); ++i) gj.push_back(ring_elem_str(g[i]));
    gens.push_back(gj);
  }
  rec["generators"] = gens;
  return rec;
}

inline std::string distribution_csv(const WeightDistribution& d) {
  std::string out = "weight,count\n";
  for (auto& [w, c] : d)
    out += std::to_string(w) + "," + std::to_string(c) + "\n";
  return out;
}

}  // namespace ucyclic
