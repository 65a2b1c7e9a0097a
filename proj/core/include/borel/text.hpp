#pragma once

#include "borel/decompose.hpp"
#include "borel/homology.hpp"
#include "borel/ideal.hpp"
#include "borel/polarize.hpp"
#include "borel/series.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace borel {

// Grammar (whitespace insensitive):
//   ideal := "0" | "1" | mono ("," mono)*
//   mono  := term ("*" term)*
//   term  := L INT ("^" INT)?  |  L INT "_" INT        with L in {x, y}
// A single ideal uses either plain or grid terms, not both.

struct ParsedIdeal {
  MonomialIdeal ideal;
  /// Set when some listed generator was redundant.
  bool reduced = false;
};

struct ParsedGridIdeal {
  GridIdeal ideal;
  bool reduced = false;
};

/// Ambient n is `n` if given, otherwise the largest variable index seen (1 for
/// the constant ideals). Throws ParseError or DimensionMismatch.
ParsedIdeal parse_ideal(std::string_view text, std::optional<std::size_t> n = std::nullopt);
ParsedGridIdeal parse_grid_ideal(std::string_view text,
                                 std::optional<std::size_t> rows = std::nullopt,
                                 std::optional<std::size_t> cols = std::nullopt);
/// True if the text uses grid terms `x{i}_{j}`.
bool looks_like_grid(std::string_view text);

std::string to_string(const Monomial& m, char letter = 'x');
/// Canonical order, ", " separated; "0" and "1" for the constant ideals.
std::string to_string(const MonomialIdeal& ideal, char letter = 'x');
std::string to_string(const GridMonomial& m, char letter = 'x');
std::string to_string(const GridIdeal& ideal, char letter = 'x');
std::string to_string(const IrreducibleComponent& a);
std::string to_string(const GridComponent& b);
std::string to_string(const GeneralComponent& c, char letter = 'x');
std::string to_string(std::span<const IrreducibleComponent> comps);
std::string to_string(std::span<const GridComponent> comps);
std::string to_string(std::span<const GeneralComponent> comps, char letter = 'x');
/// One line per homological degree: "i: j=v j=v ...".
std::string to_string(const BettiTable& table);
/// One line per entry: "i=0: λ^-2 + 2λ^-1".
std::string to_string(const LocalCohSeries& series);

/// Exact-integer JSON document; every field is optional.
/// { "n", "d", "generators": [[exp..]..], "components": [[a..]..],
///   "betti": {"i,j": v}, "lc": {"i": {"num": {"exp": coeff}, "denpow": k}} }
struct Document {
  std::optional<std::size_t> n;
  std::optional<std::size_t> d;
  std::optional<std::vector<std::vector<Exponent>>> generators;
  std::optional<std::vector<std::vector<std::size_t>>> components;
  std::optional<BettiTable> betti;
  std::optional<LocalCohSeries> lc;

  friend bool operator==(const Document&, const Document&) = default;
};

Document document_for(const MonomialIdeal& ideal, std::optional<std::size_t> d = std::nullopt);
std::vector<std::vector<std::size_t>> component_rows(std::span<const IrreducibleComponent> comps);
std::vector<std::vector<std::size_t>> component_rows(std::span<const GridComponent> comps);

/// Deterministic: keys sorted, two-space indentation, trailing newline.
std::string to_json(const Document& doc);
/// Throws ParseError on malformed JSON or schema violations.
Document document_from_json(std::string_view text);

}  // namespace borel
