#include "borel/text.hpp"

#include "borel/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>

namespace borel {

namespace {

struct Term {
  std::size_t index = 0;
  std::optional<std::size_t> column;
  Exponent exponent = 1;
};

struct RawIdeal {
  bool zero = false;
  bool grid = false;
  std::vector<std::vector<Term>> monomials;  // an empty product is the constant 1
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RawIdeal parse() {
    RawIdeal out;
    skip_ws();
    if (at_end()) fail("empty ideal");
    if (peek() == '0') {
      advance();
      skip_ws();
      if (!at_end()) fail("unexpected input after the zero ideal");
      out.zero = true;
      return out;
    }
    std::optional<bool> grid;
    for (;;) {
      out.monomials.push_back(parse_monomial(grid));
      skip_ws();
      if (at_end()) break;
      if (peek() != ',') fail(std::string("expected ',' but found '") + peek() + "'");
      advance();
    }
    out.grid = grid.value_or(false);
    return out;
  }

 private:
  std::vector<Term> parse_monomial(std::optional<bool>& grid) {
    skip_ws();
    if (!at_end() && peek() == '1') {
      advance();
      return {};
    }
    std::vector<Term> terms;
    for (;;) {
      terms.push_back(parse_term(grid));
      skip_ws();
      if (at_end() || peek() != '*') break;
      advance();
    }
    return terms;
  }

  Term parse_term(std::optional<bool>& grid) {
    skip_ws();
    if (at_end()) fail("expected a variable");
    const char c = peek();
    if (c != 'x' && c != 'y') fail(std::string("expected a variable but found '") + c + "'");
    if (letter_ && *letter_ != c) fail("variables mix the letters x and y");
    letter_ = c;
    advance();
    Term term;
    term.index = parse_positive("variable index");
    skip_ws();
    const bool is_grid = !at_end() && peek() == '_';
    if (grid && *grid != is_grid) fail("grid terms x{i}_{j} cannot be mixed with plain terms");
    grid = is_grid;
    if (is_grid) {
      advance();
      term.column = parse_positive("column index");
      skip_ws();
      if (!at_end() && peek() == '^') fail("grid variables cannot carry exponents");
    } else if (!at_end() && peek() == '^') {
      advance();
      const auto e = parse_positive("exponent");
      if (e > std::numeric_limits<Exponent>::max()) fail("exponent too large");
      term.exponent = static_cast<Exponent>(e);
    }
    return term;
  }

  std::size_t parse_positive(const char* what) {
    skip_ws();
    if (at_end()) fail(std::string("expected ") + what);
    if (peek() == '-') fail(std::string(what) + " must be positive");
    const std::size_t begin = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (begin == pos_) {
      pos_ = begin;
      fail(std::string("expected ") + what);
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + begin, text_.data() + pos_, value);
    (void)ptr;
    const std::size_t end = pos_;
    pos_ = begin;
    if (ec != std::errc{} || value > std::numeric_limits<std::uint32_t>::max())
      fail(std::string(what) + " out of range");
    if (value == 0) fail(std::string(what) + " must be positive");
    column_ += end - begin;
    pos_ = end;
    return static_cast<std::size_t>(value);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::optional<char> letter_;
};

std::size_t count_distinct(const std::vector<Monomial>& gens) {
  return std::set<Monomial>(gens.begin(), gens.end()).size();
}

}  // namespace

bool looks_like_grid(std::string_view text) { return text.find('_') != std::string_view::npos; }

ParsedIdeal parse_ideal(std::string_view text, std::optional<std::size_t> n) {
  const RawIdeal raw = Parser(text).parse();
  if (raw.grid) throw ParseError("expected plain variables x{i}, found grid variables", 1, 1);
  std::size_t seen = 1;
  for (const auto& mono : raw.monomials)
    for (const auto& t : mono) seen = std::max(seen, t.index);
  const std::size_t ambient = n.value_or(seen);
  if (ambient < seen)
    throw DimensionMismatch("variable x" + std::to_string(seen) + " exceeds the ring with " +
                            std::to_string(ambient) + " variables");
  if (raw.zero) return {MonomialIdeal::zero(ambient), false};

  std::vector<Monomial> gens;
  for (const auto& mono : raw.monomials) {
    std::vector<Exponent> e(ambient, 0);
    for (const auto& t : mono) {
      if (e[t.index - 1] > std::numeric_limits<Exponent>::max() - t.exponent)
        throw ParseError("exponent too large", 1, 1);
      e[t.index - 1] += t.exponent;
    }
    gens.emplace_back(std::move(e));
  }
  const std::size_t listed = gens.size();
  const std::size_t distinct = count_distinct(gens);
  MonomialIdeal ideal(ambient, std::move(gens));
  return {ideal, listed != ideal.size() || distinct != listed};
}

ParsedGridIdeal parse_grid_ideal(std::string_view text, std::optional<std::size_t> rows,
                                 std::optional<std::size_t> cols) {
  const RawIdeal raw = Parser(text).parse();
  bool plain_terms = false;
  std::size_t seen_rows = 1, seen_cols = 1;
  for (const auto& mono : raw.monomials)
    for (const auto& t : mono) {
      if (!t.column) plain_terms = true;
      seen_rows = std::max(seen_rows, t.index);
      seen_cols = std::max(seen_cols, t.column.value_or(1));
    }
  if (plain_terms) throw ParseError("expected grid variables x{i}_{j}", 1, 1);
  const std::size_t r = rows.value_or(seen_rows);
  const std::size_t c = cols.value_or(seen_cols);
  if (r < seen_rows || c < seen_cols)
    throw DimensionMismatch("grid variable outside the " + std::to_string(r) + " x " +
                            std::to_string(c) + " grid");
  if (raw.zero) return {GridIdeal(r, c), false};

  std::vector<Monomial> flat;
  for (const auto& mono : raw.monomials) {
    std::vector<Exponent> e(r * c, 0);
    for (const auto& t : mono) {
      auto& slot = e[(t.index - 1) * c + *t.column - 1];
      if (slot != 0)
        throw ParseError("repeated grid variable x" + std::to_string(t.index) + "_" +
                             std::to_string(*t.column),
                         1, 1);
      slot = 1;
    }
    flat.emplace_back(std::move(e));
  }
  const std::size_t listed = flat.size();
  const std::size_t distinct = count_distinct(flat);
  MonomialIdeal ideal(r * c, std::move(flat));
  const bool reduced = listed != ideal.size() || distinct != listed;
  return {GridIdeal(r, c, std::move(ideal)), reduced};
}

std::string to_string(const Monomial& m, char letter) {
  if (m.is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (VarIndex i = 1; i <= m.size(); ++i) {
    const Exponent e = m.exponent(i);
    if (e == 0) continue;
    if (!first) out << '*';
    first = false;
    out << letter << i;
    if (e > 1) out << '^' << e;
  }
  return out.str();
}

std::string to_string(const MonomialIdeal& ideal, char letter) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += to_string(g, letter);
  }
  return out;
}

std::string to_string(const GridMonomial& m, char letter) {
  if (m.cells().empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& cell : m.cells()) {
    if (!first) out << '*';
    first = false;
    out << letter << cell.row << '_' << cell.col;
  }
  return out.str();
}

std::string to_string(const GridIdeal& ideal, char letter) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += to_string(g, letter);
  }
  return out;
}

namespace {

template <class Range>
std::string tuple(const Range& values) {
  std::string out = "(";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(v);
  }
  return out + ")";
}

template <class Item, class Print>
std::string joined(std::span<const Item> items, Print print) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += "; ";
    out += print(item);
  }
  return out;
}

}  // namespace

std::string to_string(const IrreducibleComponent& a) { return tuple(a.exponents()); }

std::string to_string(const GridComponent& b) { return tuple(b.columns()); }

std::string to_string(const GeneralComponent& c, char letter) {
  std::string out = "(";
  bool first = true;
  for (const auto& [v, e] : c.powers()) {
    if (!first) out += ", ";
    first = false;
    out += letter + std::to_string(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out + ")";
}

std::string to_string(std::span<const IrreducibleComponent> comps) {
  return joined(comps, [](const auto& a) { return to_string(a); });
}

std::string to_string(std::span<const GridComponent> comps) {
  return joined(comps, [](const auto& b) { return to_string(b); });
}

std::string to_string(std::span<const GeneralComponent> comps, char letter) {
  return joined(comps, [letter](const auto& c) { return to_string(c, letter); });
}

std::string to_string(const BettiTable& table) {
  std::ostringstream out;
  for (const auto& [key, value] : table.entries())
    out << "beta_{" << key.first << ',' << key.second << "} = " << value << '\n';
  return out.str();
}

std::string to_string(const LocalCohSeries& series) {
  std::ostringstream out;
  for (const auto& [i, s] : series) out << "i=" << i << ": " << to_string(s) << '\n';
  return out.str();
}

Document document_for(const MonomialIdeal& ideal, std::optional<std::size_t> d) {
  Document doc;
  doc.n = ideal.ambient();
  doc.d = d.value_or(default_columns(ideal));
  std::vector<std::vector<Exponent>> gens;
  for (const auto& g : ideal.generators())
    gens.emplace_back(g.exponents().begin(), g.exponents().end());
  doc.generators = std::move(gens);
  return doc;
}

std::vector<std::vector<std::size_t>> component_rows(std::span<const IrreducibleComponent> comps) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& a : comps) out.emplace_back(a.exponents().begin(), a.exponents().end());
  return out;
}

std::vector<std::vector<std::size_t>> component_rows(std::span<const GridComponent> comps) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& b : comps) out.emplace_back(b.columns().begin(), b.columns().end());
  return out;
}

namespace {

using nlohmann::json;

json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

[[noreturn]] void schema_error(const std::string& message) {
  throw ParseError("JSON schema: " + message, 1, 1);
}

Integer integer_from_json(const json& v) {
  if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  schema_error("expected an integer");
}

long long parse_key(const std::string& key) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), value);
  if (ec != std::errc{} || ptr != key.data() + key.size())
    schema_error("bad integer key '" + key + "'");
  return value;
}

std::size_t size_from_json(const json& v) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    schema_error("expected a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace

std::string to_json(const Document& doc) {
  json out = json::object();
  if (doc.n) out["n"] = *doc.n;
  if (doc.d) out["d"] = *doc.d;
  if (doc.generators) out["generators"] = *doc.generators;
  if (doc.components) out["components"] = *doc.components;
  if (doc.betti) {
    json betti = json::object();
    for (const auto& [key, value] : doc.betti->entries())
      betti[std::to_string(key.first) + "," + std::to_string(key.second)] = integer_to_json(value);
    out["betti"] = std::move(betti);
  }
  if (doc.lc) {
    json lc = json::object();
    for (const auto& [i, s] : *doc.lc) {
      json num = json::object();
      for (const auto& [e, c] : s.numerator()) num[std::to_string(e)] = integer_to_json(c);
      lc[std::to_string(i)] = {{"num", std::move(num)}, {"denpow", s.denominator_power()}};
    }
    out["lc"] = std::move(lc);
  }
  return out.dump(2) + "\n";
}

Document document_from_json(std::string_view text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 1, e.byte);
  }
  if (!in.is_object()) schema_error("top level must be an object");
  Document doc;
  try {
    if (in.contains("n")) doc.n = size_from_json(in["n"]);
    if (in.contains("d")) doc.d = size_from_json(in["d"]);
    if (in.contains("generators")) {
      std::vector<std::vector<Exponent>> gens;
      for (const auto& row : in["generators"]) {
        std::vector<Exponent> e;
        for (const auto& x : row) e.push_back(static_cast<Exponent>(size_from_json(x)));
        gens.push_back(std::move(e));
      }
      doc.generators = std::move(gens);
    }
    if (in.contains("components")) {
      std::vector<std::vector<std::size_t>> comps;
      for (const auto& row : in["components"]) {
        std::vector<std::size_t> c;
        for (const auto& x : row) c.push_back(size_from_json(x));
        comps.push_back(std::move(c));
      }
      doc.components = std::move(comps);
    }
    if (in.contains("betti")) {
      BettiTable table;
      for (const auto& [key, value] : in["betti"].items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos) schema_error("betti key must be \"i,j\"");
        table.add(static_cast<int>(parse_key(key.substr(0, comma))),
                  static_cast<int>(parse_key(key.substr(comma + 1))), integer_from_json(value));
      }
      doc.betti = std::move(table);
    }
    if (in.contains("lc")) {
      LocalCohSeries lc;
      for (const auto& [key, entry] : in["lc"].items()) {
        if (!entry.is_object() || !entry.contains("num") || !entry.contains("denpow"))
          schema_error("lc entries need \"num\" and \"denpow\"");
        Laurent num;
        for (const auto& [e, c] : entry["num"].items())
          laurent::add_term(num, static_cast<int>(parse_key(e)), integer_from_json(c));
        const long long i = parse_key(key);
        if (i < 0) schema_error("lc index must be nonnegative");
        const auto denpow = static_cast<unsigned>(size_from_json(entry["denpow"]));
        lc.emplace(static_cast<std::size_t>(i), RationalSeries(std::move(num), denpow));
      }
      doc.lc = std::move(lc);
    }
  } catch (const json::exception& e) {
    schema_error(e.what());
  }
  return doc;
}

}  // namespace borel
