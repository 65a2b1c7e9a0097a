#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace borel {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::uint32_t;

/// Variable indices are 1-based throughout the public API (x_1, ..., x_n).
using VarIndex = std::size_t;

/// A monomial x^a of a polynomial ring in a fixed number of variables,
/// stored as its exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  static Monomial one(std::size_t n);
  /// x_i in n variables.
  static Monomial variable(std::size_t n, VarIndex i);

  std::size_t size() const noexcept { return exponents_.size(); }
  /// Exponent of x_i (1-based).
  Exponent exponent(VarIndex i) const { return exponents_.at(i - 1); }
  std::span<const Exponent> exponents() const noexcept { return exponents_; }

  std::uint64_t degree() const noexcept;
  /// Largest i with a_i > 0, or 0 for the monomial 1.
  VarIndex nu() const noexcept;
  std::vector<VarIndex> support() const;
  bool is_one() const noexcept { return nu() == 0; }
  bool is_squarefree() const noexcept;

  /// True iff this divides other. Throws DimensionMismatch on arity mismatch.
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; throws InputError unless other divides *this.
  Monomial operator/(const Monomial& other) const;
  Monomial times_variable(VarIndex i) const;
  /// Divides by x_i; throws InputError when x_i does not divide.
  Monomial divide_variable(VarIndex i) const;
  /// Multiplies by x_j / x_i.
  Monomial shift(VarIndex from, VarIndex to) const;

  /// The same exponents in a ring with n >= size() variables.
  Monomial extended(std::size_t n) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Plain lexicographic order on exponent vectors (for containers).
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exponents_;
};

/// Canonical display order: ascending degree, then descending
/// lexicographic exponent vector (x1^2 before x1*x2 before x2^2).
bool canonical_less(const Monomial& a, const Monomial& b);

}  // namespace borel
