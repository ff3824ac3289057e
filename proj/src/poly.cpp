#include <bilaguerre/poly.hpp>

#include <json.hpp>

namespace bilag {

using ordered_json = nlohmann::ordered_json;

IntBiPoly to_integer_poly(const BiPoly& p) {
  IntBiPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_integer())
      throw NonIntegralError(
          m, "to_integer_poly: coefficient " + c.to_string() + " at x^" +
                 std::to_string(m.x) + " y^" + std::to_string(m.y) +
                 " is not an integer");
    r.set_coeff(m, c.num());
  }
  return r;
}

Integer canonical_residue(const Integer& a, const Integer& m) {
  if (m < 1) throw std::invalid_argument("canonical_residue: modulus must be >= 1");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

IntBiPoly reduce_mod(const IntBiPoly& p, const Integer& modulus) {
  if (modulus < 1) throw std::invalid_argument("reduce_mod: modulus must be >= 1");
  IntBiPoly r;
  for (const auto& [m, c] : p.terms())
    r.set_coeff(m, canonical_residue(c, modulus));
  return r;
}

// ===== JSON ================================================================

std::string serialize(const BiPoly& p) {
  ordered_json j;
  j["vars"] = {"x", "y"};
  auto terms = ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    ordered_json t;
    t["e"] = {m.x, m.y};
    t["num"] = c.num().get_str();
    t["den"] = c.den().get_str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

namespace {

[[noreturn]] void parse_fail(const std::string& context, const std::string& why) {
  throw PolyParseError("parse_bipoly: " + context + ": " + why);
}

Integer term_integer(const ordered_json& t, std::size_t idx, const char* key) {
  std::string context = "terms[" + std::to_string(idx) + "]";
  if (!t.contains(key)) parse_fail(context, std::string("missing \"") + key + "\"");
  const auto& v = t.at(key);
  if (!v.is_string())
    parse_fail(context, std::string("\"") + key + "\" must be a decimal string");
  try {
    return parse_integer(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    parse_fail(context, e.what());
  }
}

}  // namespace

BiPoly parse_bipoly(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PolyParseError("parse_bipoly: invalid JSON at byte " +
                         std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) parse_fail("document", "expected a JSON object");
  if (!j.contains("vars") || j.at("vars") != ordered_json({"x", "y"}))
    parse_fail("\"vars\"", "expected [\"x\",\"y\"]");
  if (!j.contains("terms") || !j.at("terms").is_array())
    parse_fail("\"terms\"", "expected an array");

  BiPoly p;
  std::size_t idx = 0;
  for (const auto& t : j.at("terms")) {
    std::string context = "terms[" + std::to_string(idx) + "]";
    if (!t.is_object()) parse_fail(context, "expected an object");
    if (!t.contains("e") || !t.at("e").is_array() || t.at("e").size() != 2)
      parse_fail(context, "\"e\" must be an array of two exponents");
    for (const auto& e : t.at("e"))
      if (!e.is_number_unsigned())
        parse_fail(context, "exponents must be nonnegative integers");
    Monomial2 m{t.at("e")[0].get<unsigned>(), t.at("e")[1].get<unsigned>()};
    Integer num = term_integer(t, idx, "num");
    Integer den = term_integer(t, idx, "den");
    if (den == 0) parse_fail(context, "zero denominator");
    p.add_coeff(m, Rational(num, den));
    ++idx;
  }
  return p;
}

// ===== pretty printing =====================================================

namespace {

// "x", "x^2", "x^2*y" etc.; empty for the constant monomial.
std::string monomial_string(unsigned ex, unsigned ey) {
  std::string s;
  if (ex > 0) {
    s += "x";
    if (ex > 1) s += "^" + std::to_string(ex);
  }
  if (ey > 0) {
    if (!s.empty()) s += "*";
    s += "y";
    if (ey > 1) s += "^" + std::to_string(ey);
  }
  return s;
}

void append_term(std::string& out, const Rational& c, const std::string& mono) {
  bool first = out.empty();
  Rational a = c.sign() < 0 ? -c : c;
  if (first)
    out += c.sign() < 0 ? "-" : "";
  else
    out += c.sign() < 0 ? " - " : " + ";
  if (mono.empty()) {
    out += a.to_string();
  } else if (a == Rational(1)) {
    out += mono;
  } else {
    out += a.to_string() + "*" + mono;
  }
}

}  // namespace

std::string to_pretty_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) append_term(out, c, monomial_string(e, 0));
  return out;
}

std::string to_pretty_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) append_term(out, c, monomial_string(m.x, m.y));
  return out;
}

}  // namespace bilag
