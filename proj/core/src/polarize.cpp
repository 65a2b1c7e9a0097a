#include "borel/polarize.hpp"

#include "borel/errors.hpp"

#include <algorithm>
#include <string>

namespace borel {

GridMonomial::GridMonomial(std::size_t rows, std::size_t cols, std::vector<Cell> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows == 0 || cols == 0) throw InputError("grid dimensions must be positive");
  for (const auto& c : cells_)
    if (c.row < 1 || c.row > rows || c.col < 1 || c.col > cols)
      throw DimensionMismatch("grid variable x" + std::to_string(c.row) + "_" +
                              std::to_string(c.col) + " outside a " + std::to_string(rows) +
                              "x" + std::to_string(cols) + " grid");
  std::sort(cells_.begin(), cells_.end());
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
    throw NotSquarefree("grid monomials are squarefree");
}

GridMonomial GridMonomial::from_flat(const Monomial& m, std::size_t rows, std::size_t cols) {
  if (m.size() != rows * cols) throw DimensionMismatch("flat monomial does not fit the grid");
  if (!m.is_squarefree()) throw NotSquarefree("grid monomials are squarefree");
  std::vector<Cell> cells;
  for (auto v : m.support()) cells.push_back({(v - 1) / cols + 1, (v - 1) % cols + 1});
  return GridMonomial(rows, cols, std::move(cells));
}

Monomial GridMonomial::to_flat() const {
  std::vector<Exponent> e(rows_ * cols_, 0);
  for (const auto& c : cells_) e[(c.row - 1) * cols_ + (c.col - 1)] = 1;
  return Monomial(std::move(e));
}

GridIdeal::GridIdeal(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), flat_(rows * cols) {}

GridIdeal::GridIdeal(std::size_t rows, std::size_t cols, const std::vector<GridMonomial>& gens)
    : rows_(rows), cols_(cols), flat_(rows * cols) {
  std::vector<Monomial> flat;
  flat.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.rows() != rows || g.cols() != cols) throw DimensionMismatch("grid shape mismatch");
    flat.push_back(g.to_flat());
  }
  flat_ = MonomialIdeal(rows * cols, std::move(flat));
}

GridIdeal::GridIdeal(std::size_t rows, std::size_t cols, MonomialIdeal flat)
    : rows_(rows), cols_(cols), flat_(std::move(flat)) {
  if (flat_.ambient() != rows * cols) throw DimensionMismatch("flat ideal does not fit the grid");
  if (!flat_.is_squarefree()) throw NotSquarefree("grid ideals are squarefree");
}

std::vector<GridMonomial> GridIdeal::generators() const {
  std::vector<GridMonomial> out;
  out.reserve(flat_.size());
  for (const auto& g : flat_.generators()) out.push_back(GridMonomial::from_flat(g, rows_, cols_));
  return out;
}

bool GridIdeal::contains(const GridMonomial& m) const {
  if (m.rows() != rows_ || m.cols() != cols_) throw DimensionMismatch("grid shape mismatch");
  return borel::contains(flat_, m.to_flat());
}

std::size_t default_columns(const MonomialIdeal& ideal) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(ideal.max_degree()));
}

GridMonomial bpol_monomial(const Monomial& m, std::size_t d) {
  if (m.degree() > d)
    throw DegreeBoundExceeded("b-pol needs deg(m) = " + std::to_string(m.degree()) +
                              " <= d = " + std::to_string(d));
  std::vector<Cell> cells;
  std::size_t col = 0;
  for (VarIndex i = 1; i <= m.size(); ++i)
    for (Exponent k = 0; k < m.exponent(i); ++k) cells.push_back({i, ++col});
  return GridMonomial(m.size(), d, std::move(cells));
}

GridIdeal bpol_ideal(const MonomialIdeal& ideal, std::optional<std::size_t> d) {
  const std::size_t cols = d.value_or(default_columns(ideal));
  std::vector<GridMonomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(bpol_monomial(g, cols));
  return GridIdeal(ideal.ambient(), cols, gens);
}

GridMonomial stdpol_monomial(const Monomial& m, std::size_t d) {
  std::vector<Cell> cells;
  for (VarIndex i = 1; i <= m.size(); ++i) {
    if (m.exponent(i) > d)
      throw DegreeBoundExceeded("standard polarization needs every exponent <= d = " +
                                std::to_string(d));
    for (std::size_t j = 1; j <= m.exponent(i); ++j) cells.push_back({i, j});
  }
  return GridMonomial(m.size(), d, std::move(cells));
}

GridIdeal stdpol_ideal(const MonomialIdeal& ideal, std::optional<std::size_t> d) {
  const std::size_t cols = d.value_or(default_columns(ideal));
  std::vector<GridMonomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(stdpol_monomial(g, cols));
  return GridIdeal(ideal.ambient(), cols, gens);
}

MonomialIdeal depolarize(const GridIdeal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e(ideal.rows(), 0);
    for (const auto& c : g.cells()) ++e[c.row - 1];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ideal.rows(), std::move(gens));
}

GridIdeal transpose(const GridIdeal& ideal) {
  std::vector<GridMonomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<Cell> cells;
    for (const auto& c : g.cells()) cells.push_back({c.col, c.row});
    gens.emplace_back(ideal.cols(), ideal.rows(), std::move(cells));
  }
  return GridIdeal(ideal.cols(), ideal.rows(), gens);
}

bool bpol_membership(const MonomialIdeal& ideal, const Monomial& m, std::optional<std::size_t> d) {
  require_strongly_stable(ideal, "bpol_membership");
  const std::size_t cols = d.value_or(std::max<std::size_t>(default_columns(ideal), m.degree()));
  if (m.size() != ideal.ambient()) throw DimensionMismatch("monomial and ideal arity differ");
  return bpol_ideal(ideal, cols).contains(bpol_monomial(m, cols));
}

bool verify_polarization(const MonomialIdeal& ideal, const GridIdeal& candidate) {
  if (candidate.rows() != ideal.ambient()) return false;
  if (depolarize(candidate) != ideal) return false;
  const auto n = static_cast<int>(candidate.rows());
  const auto d = static_cast<int>(candidate.cols());
  const auto collapsed =
      hilbert_series_quotient(candidate.flat()).times_one_minus_lambda(n * (d - 1));
  return collapsed == hilbert_series_quotient(ideal);
}

}  // namespace borel
