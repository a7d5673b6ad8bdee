#include "staircase/io.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

namespace staircase {

namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Monomial term grammar

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  bool eat(char c) {
    if (!done() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }
};

std::int64_t parse_integer(Cursor& c) {
  c.skip_ws();
  bool negative = false;
  if (c.eat('-')) negative = true;
  if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek()))) {
    c.fail("expected an integer");
  }
  std::int64_t value = 0;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    value = checked_add(checked_mul(value, 10), c.text[c.pos] - '0');
    ++c.pos;
  }
  return negative ? checked_neg(value) : value;
}

// One "1" / "x[^a]" / "y[^b]" token; adds its exponent into the term.
void parse_monomial_factor(Cursor& c, LatticePoint& term) {
  c.skip_ws();
  if (c.done()) c.fail("expected a monomial factor");
  if (c.eat('1')) return;
  char var = 0;
  if (c.eat('x')) {
    var = 'x';
  } else if (c.eat('y')) {
    var = 'y';
  } else {
    c.fail("expected '1', 'x' or 'y'");
  }
  std::int64_t exponent = 1;
  c.skip_ws();
  if (c.eat('^')) exponent = parse_integer(c);
  if (var == 'x') {
    term.x = checked_add(term.x, exponent);
  } else {
    term.y = checked_add(term.y, exponent);
  }
}

LatticePoint parse_term(Cursor& c) {
  LatticePoint term{0, 0};
  parse_monomial_factor(c, term);
  c.skip_ws();
  while (c.eat('*')) {
    parse_monomial_factor(c, term);
    c.skip_ws();
  }
  return term;
}

std::string exponent_part(char var, std::int64_t e) {
  if (e == 0) return "";
  std::string s(1, var);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

// ---------------------------------------------------------------------------
// JSON helpers

[[noreturn]] void schema_fail(const std::string& what, const std::string& pointer) {
  throw SchemaError(what, pointer);
}

Json parse_json(std::string_view text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw SchemaError("document is not valid JSON", "");
  return doc;
}

std::int64_t expect_int(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer()) schema_fail("expected an integer", pointer);
  return j.get<std::int64_t>();
}

LatticePoint expect_point(const Json& j, const std::string& pointer) {
  if (!j.is_array() || j.size() != 2) schema_fail("expected a point [x,y]", pointer);
  return LatticePoint{expect_int(j[0], pointer + "/0"), expect_int(j[1], pointer + "/1")};
}

std::vector<LatticePoint> expect_points(const Json& j, const std::string& pointer) {
  if (!j.is_array()) schema_fail("expected an array of points", pointer);
  std::vector<LatticePoint> points;
  points.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    points.push_back(expect_point(j[i], pointer + "/" + std::to_string(i)));
  }
  return points;
}

Json points_json(const std::vector<LatticePoint>& points) {
  Json arr = Json::array();
  for (const LatticePoint& p : points) arr.push_back(Json::array({p.x, p.y}));
  return arr;
}

Json factors_json(const std::map<Slope, std::int64_t>& factors) {
  Json arr = Json::array();
  for (const auto& [slope, count] : factors) {
    arr.push_back(Json::array({slope.num, slope.den, count}));
  }
  return arr;
}

std::map<Slope, std::int64_t> expect_factors(const Json& j, const std::string& pointer) {
  if (!j.is_array()) schema_fail("expected an array of [r,s,b] factors", pointer);
  std::map<Slope, std::int64_t> factors;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = pointer + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != 3) schema_fail("expected a factor [r,s,b]", at);
    const std::int64_t r = expect_int(j[i][0], at + "/0");
    const std::int64_t s = expect_int(j[i][1], at + "/1");
    const std::int64_t b = expect_int(j[i][2], at + "/2");
    if (r < 1 || s < 1) schema_fail("slope components must be positive", at);
    const Slope slope{r, s};
    if (Slope::reduced(r, s) != slope) schema_fail("slope must be in lowest terms", at);
    if (b < 1) schema_fail("multiplicity must be positive", at);
    if (!factors.emplace(slope, b).second) schema_fail("duplicate slope", at);
  }
  return factors;
}

Json side_json(const FactorSide& side) {
  Json rule = Json::object();
  switch (side.kind()) {
    case FactorSide::Kind::triangular:
      rule["family"] = "triangular";
      if (side.triangular_count()) rule["count"] = *side.triangular_count();
      break;
    case FactorSide::Kind::powers: {
      const StreamFactor& f = side.list_items().front();
      rule["family"] = "powers";
      rule["slope"] = Json::array({f.slope.num, f.slope.den});
      rule["exponent"] = f.multiplicity;
      break;
    }
    case FactorSide::Kind::list: {
      Json arr = Json::array();
      for (const StreamFactor& f : side.list_items()) {
        arr.push_back(Json::array({f.slope.num, f.slope.den, f.multiplicity}));
      }
      rule["list"] = std::move(arr);
      break;
    }
  }
  return rule;
}

FactorSide expect_side(const Json& j, const std::string& pointer) {
  if (!j.is_object()) schema_fail("expected a stream rule object", pointer);
  if (j.contains("list")) {
    // Validation only; the items must keep document order since left sides
    // are written in descending slope order.
    expect_factors(j["list"], pointer + "/list");
    const Json& arr = j["list"];
    std::vector<StreamFactor> items;
    items.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
      items.push_back(StreamFactor{Slope{arr[i][0].get<std::int64_t>(),
                                         arr[i][1].get<std::int64_t>()},
                                   arr[i][2].get<std::int64_t>()});
    }
    return FactorSide::from_list(std::move(items));
  }
  if (!j.contains("family")) schema_fail("rule needs either \"list\" or \"family\"", pointer);
  if (!j["family"].is_string()) schema_fail("family name must be a string", pointer + "/family");
  const std::string family = j["family"].get<std::string>();
  if (family == "triangular") {
    std::optional<std::int64_t> count;
    if (j.contains("count")) count = expect_int(j["count"], pointer + "/count");
    return FactorSide::triangular(count);
  }
  if (family == "powers") {
    if (!j.contains("slope") || !j.contains("exponent")) {
      schema_fail("powers rule needs \"slope\" and \"exponent\"", pointer);
    }
    const LatticePoint s = expect_point(j["slope"], pointer + "/slope");
    if (s.x < 1 || s.y < 1) schema_fail("slope components must be positive", pointer + "/slope");
    return FactorSide::powers(Slope::reduced(s.x, s.y),
                              expect_int(j["exponent"], pointer + "/exponent"));
  }
  schema_fail("unknown stream family '" + family + "'", pointer + "/family");
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial lists

ParsedGenerators parse_generators(std::string_view text) {
  Cursor c{text};
  ParsedGenerators out;
  c.skip_ws();
  if (c.done()) return out;  // empty list; minimize() reports it
  while (true) {
    const LatticePoint term = parse_term(c);
    out.points.push_back(term);
    if (term.x < 0 || term.y < 0) out.has_negative_exponent = true;
    c.skip_ws();
    if (c.done()) break;
    if (!c.eat(',')) c.fail("expected ',' between terms");
  }
  return out;
}

std::string print_monomial(LatticePoint p) {
  const std::string xs = exponent_part('x', p.x);
  const std::string ys = exponent_part('y', p.y);
  if (xs.empty() && ys.empty()) return "1";
  if (xs.empty()) return ys;
  if (ys.empty()) return xs;
  return xs + "*" + ys;
}

std::string print_ideal(const MonomialIdeal& ideal) {
  std::string out;
  const auto& gens = ideal.generators();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    if (!out.empty()) out += ", ";
    out += print_monomial(*it);
  }
  return out;
}

std::string print_module(const MonomialModule& m) {
  std::string out;
  for (const LatticePoint& g : m.generators()) {
    if (!out.empty()) out += ", ";
    out += print_monomial(g);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Factorization text

Factorization parse_factorization(std::string_view text) {
  Cursor c{text};
  Factorization f;
  bool saw_token = false;
  c.skip_ws();
  while (!c.done()) {
    if (saw_token) {
      if (!c.eat('*')) c.fail("expected '*' between factors");
      c.skip_ws();
    }
    if (c.eat('E')) {
      c.skip_ws();
      if (!c.eat('[')) c.fail("expected '[' after 'E'");
      const std::int64_t r = parse_integer(c);
      c.skip_ws();
      if (!c.eat('/')) c.fail("expected '/' in slope");
      const std::int64_t s = parse_integer(c);
      c.skip_ws();
      if (!c.eat(']')) c.fail("expected ']' after slope");
      if (r < 1 || s < 1) c.fail("slope components must be positive");
      if (Slope::reduced(r, s) != Slope{r, s}) c.fail("slope must be in lowest terms");
      std::int64_t count = 1;
      c.skip_ws();
      if (c.eat('^')) {
        count = parse_integer(c);
        if (count < 1) c.fail("factor exponent must be positive");
      }
      auto [it, inserted] = f.factors.try_emplace(Slope{r, s}, count);
      if (!inserted) it->second = checked_add(it->second, count);
    } else {
      parse_monomial_factor(c, f.anchor);
    }
    saw_token = true;
    c.skip_ws();
  }
  if (!saw_token) c.fail("expected a factorization");
  return f;
}

std::string print_factorization(const Factorization& f) {
  std::string out;
  for (const auto& [slope, count] : f.factors) {
    if (!out.empty()) out += "*";
    out += "E[" + slope.str() + "]";
    if (count != 1) out += "^" + std::to_string(count);
  }
  if (f.anchor != LatticePoint{0, 0}) {
    if (!out.empty()) out += "*";
    out += print_monomial(f.anchor);
  }
  if (out.empty()) out = "1";
  return out;
}

// ---------------------------------------------------------------------------
// JSON

std::string to_json(const LatticePoint& p) { return Json::array({p.x, p.y}).dump(); }

std::string to_json(const MonomialIdeal& ideal) {
  Json doc = Json::object();
  doc["generators"] = points_json(ideal.generators());
  return doc.dump();
}

std::string to_json(const MonomialModule& m) {
  Json doc = Json::object();
  doc["generators"] = points_json(m.generators());
  return doc.dump();
}

std::string to_json(const Factorization& f) {
  Json doc = Json::object();
  doc["anchor"] = Json::array({f.anchor.x, f.anchor.y});
  doc["factors"] = factors_json(f.factors);
  return doc.dump();
}

std::string to_json(const FactorStream& s) {
  Json doc = Json::object();
  doc["anchor"] = Json::array({s.anchor().x, s.anchor().y});
  doc["right"] = side_json(s.right());
  doc["left"] = side_json(s.left());
  return doc.dump();
}

std::string to_json(const Window& w) {
  Json doc = Json::object();
  doc["rect"] = Json::array({w.rect().x0, w.rect().x1, w.rect().y0, w.rect().y1});
  Json rows = Json::array();
  for (std::int64_t y = w.rect().y1; y >= w.rect().y0; --y) {
    std::string row;
    for (std::int64_t x = w.rect().x0; x <= w.rect().x1; ++x) {
      row += w.at(x, y) ? '#' : '.';
    }
    rows.push_back(row);
  }
  doc["rows"] = std::move(rows);
  return doc.dump();
}

std::string to_json(const StabilizationReport& report) {
  Json doc = Json::object();
  doc["from"] = report.n_start;
  doc["to"] = report.n_end;
  doc["stabilized"] = report.stable_from.has_value();
  if (report.stable_from) {
    doc["n0"] = *report.stable_from;
  } else {
    doc["n0"] = nullptr;
  }
  doc["window"] = Json::parse(to_json(report.window));
  return doc.dump();
}

LatticePoint lattice_point_from_json(std::string_view text) {
  return expect_point(parse_json(text), "");
}

MonomialIdeal ideal_from_json(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("generators")) {
    schema_fail("expected {\"generators\": [...]}", "");
  }
  return MonomialIdeal::minimize(expect_points(doc["generators"], "/generators"));
}

MonomialModule module_from_json(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("generators")) {
    schema_fail("expected {\"generators\": [...]}", "");
  }
  return MonomialModule::minimize(expect_points(doc["generators"], "/generators"));
}

Factorization factorization_from_json(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("anchor") || !doc.contains("factors")) {
    schema_fail("expected {\"anchor\": [x,y], \"factors\": [...]}", "");
  }
  Factorization f;
  f.anchor = expect_point(doc["anchor"], "/anchor");
  f.factors = expect_factors(doc["factors"], "/factors");
  return f;
}

FactorStream stream_from_json(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("anchor")) {
    schema_fail("expected {\"anchor\": [x,y], \"right\": rule, \"left\": rule}", "");
  }
  const LatticePoint anchor = expect_point(doc["anchor"], "/anchor");
  FactorSide right = doc.contains("right") ? expect_side(doc["right"], "/right")
                                           : FactorSide::empty();
  FactorSide left = doc.contains("left") ? expect_side(doc["left"], "/left")
                                         : FactorSide::empty();
  return FactorStream::make(anchor, std::move(right), std::move(left));
}

}  // namespace staircase
