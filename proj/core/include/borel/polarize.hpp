#pragma once

#include "borel/ideal.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace borel {

/// Variable x_{row,col} of the polarization ring k[x_{i,j} | i <= rows, j <= cols].
struct Cell {
  std::size_t row;
  std::size_t col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Squarefree monomial over a rows x cols grid of variables.
class GridMonomial {
 public:
  GridMonomial(std::size_t rows, std::size_t cols, std::vector<Cell> cells);

  /// Inverse of to_flat(); m must be squarefree in rows*cols variables.
  static GridMonomial from_flat(const Monomial& m, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  /// Sorted row-major.
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::size_t degree() const noexcept { return cells_.size(); }
  /// x_{i,j} becomes variable (i-1)*cols + j of a flat ring.
  Monomial to_flat() const;

  friend bool operator==(const GridMonomial&, const GridMonomial&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Cell> cells_;
};

/// Squarefree monomial ideal over a rows x cols grid, backed by the
/// row-major flattening into a MonomialIdeal of rows*cols variables.
class GridIdeal {
 public:
  GridIdeal(std::size_t rows, std::size_t cols);
  GridIdeal(std::size_t rows, std::size_t cols, const std::vector<GridMonomial>& gens);
  /// flat must be squarefree in rows*cols variables.
  GridIdeal(std::size_t rows, std::size_t cols, MonomialIdeal flat);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const MonomialIdeal& flat() const noexcept { return flat_; }
  std::vector<GridMonomial> generators() const;
  std::size_t size() const noexcept { return flat_.size(); }
  bool is_zero() const noexcept { return flat_.is_zero(); }

  bool contains(const GridMonomial& m) const;

  friend bool operator==(const GridIdeal&, const GridIdeal&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  MonomialIdeal flat_;
};

/// max(1, largest generator degree): the smallest admissible column count.
std::size_t default_columns(const MonomialIdeal& ideal);

/// Alternative polarization: the k-th factor x_{a_k} of m (indices sorted
/// nondecreasingly) becomes x_{a_k, k}. Requires deg(m) <= d.
GridMonomial bpol_monomial(const Monomial& m, std::size_t d);
GridIdeal bpol_ideal(const MonomialIdeal& ideal, std::optional<std::size_t> d = std::nullopt);

/// Standard polarization: x_i^a becomes x_{i,1} ... x_{i,a}. Requires every
/// exponent <= d.
GridMonomial stdpol_monomial(const Monomial& m, std::size_t d);
GridIdeal stdpol_ideal(const MonomialIdeal& ideal, std::optional<std::size_t> d = std::nullopt);

/// Image under x_{i,j} -> x_i.
MonomialIdeal depolarize(const GridIdeal& ideal);

/// x_{i,j} -> y_{j,i}; the result lives on a cols x rows grid.
GridIdeal transpose(const GridIdeal& ideal);

/// m in I decided through b-pol(m) in b-pol(I). I must be strongly stable.
bool bpol_membership(const MonomialIdeal& ideal, const Monomial& m,
                     std::optional<std::size_t> d = std::nullopt);

/// True iff depolarize(J) = I and the collapsing linear forms
/// x_{i,1} - x_{i,j} form a regular sequence on S~/J, tested through
/// H(S~/J) (1-λ)^{n(d-1)} = H(S/I).
bool verify_polarization(const MonomialIdeal& ideal, const GridIdeal& candidate);

}  // namespace borel
