#pragma once

#include "borel/ideal.hpp"
#include "borel/polarize.hpp"

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace borel {

/// The irreducible ideal m^a = (x_1^{a_1}, ..., x_t^{a_t}), all a_i >= 1.
class IrreducibleComponent {
 public:
  explicit IrreducibleComponent(std::vector<Exponent> a);
  IrreducibleComponent(std::initializer_list<Exponent> a);

  std::size_t t() const noexcept { return a_.size(); }
  /// a_t.
  Exponent e() const noexcept { return a_.back(); }
  /// n - sum a_i.
  long long w(std::size_t n) const noexcept;
  /// a_i, 1-based.
  Exponent operator[](std::size_t i) const { return a_.at(i - 1); }
  std::span<const Exponent> exponents() const noexcept { return a_; }

  MonomialIdeal ideal(std::size_t n) const;
  /// m^other ⊆ m^this.
  bool contains(const IrreducibleComponent& other) const noexcept;

  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
  /// Sorted by (t, lex).
  friend std::strong_ordering operator<=>(const IrreducibleComponent& x,
                                          const IrreducibleComponent& y);

 private:
  std::vector<Exponent> a_;
};

/// (x_{1,b_1}, ..., x_{t,b_t}) with 1 <= b_1 <= ... <= b_t.
class GridComponent {
 public:
  explicit GridComponent(std::vector<std::size_t> b);
  GridComponent(std::initializer_list<std::size_t> b);

  std::size_t t() const noexcept { return b_.size(); }
  std::size_t last() const noexcept { return b_.back(); }
  std::size_t operator[](std::size_t i) const { return b_.at(i - 1); }
  std::span<const std::size_t> columns() const noexcept { return b_; }

  friend bool operator==(const GridComponent&, const GridComponent&) = default;
  friend std::strong_ordering operator<=>(const GridComponent& x, const GridComponent& y);

 private:
  std::vector<std::size_t> b_;
};

/// An arbitrary irreducible monomial ideal (x_i^{a_i} | i in support).
class GeneralComponent {
 public:
  explicit GeneralComponent(std::map<VarIndex, Exponent> powers);

  const std::map<VarIndex, Exponent>& powers() const noexcept { return powers_; }
  std::size_t height() const noexcept { return powers_.size(); }
  MonomialIdeal ideal(std::size_t n) const;
  /// other ⊆ this.
  bool contains(const GeneralComponent& other) const;

  friend bool operator==(const GeneralComponent&, const GeneralComponent&) = default;
  /// Sorted by (height, lex of (variable, exponent) pairs).
  friend std::strong_ordering operator<=>(const GeneralComponent& x, const GeneralComponent& y);

 private:
  std::map<VarIndex, Exponent> powers_;
};

GeneralComponent to_general(const IrreducibleComponent& a);
/// The component (x_{i,b_i}) as a squarefree component of the flattened grid.
GeneralComponent to_general(const GridComponent& b, std::size_t cols);
/// Succeeds iff the support is {1, ..., t}.
std::optional<IrreducibleComponent> to_initial_segment(const GeneralComponent& c);

std::vector<GridComponent> psi(const IrreducibleComponent& a);

/// Irredundant irreducible decomposition of a strongly stable ideal:
/// peel off the top-height components from G(I), saturate by x_nu, repeat.
std::vector<IrreducibleComponent> decompose_strongly_stable(const MonomialIdeal& ideal);

/// The components of height nu(I).
std::vector<IrreducibleComponent> top_components(const MonomialIdeal& ideal);

/// Disjoint union of psi(a) over a in E: the decomposition of b-pol(I).
std::vector<GridComponent> bpol_decomposition(std::span<const IrreducibleComponent> components);

/// Splitting-based decomposition of an arbitrary proper nonzero monomial ideal.
std::vector<GeneralComponent> decompose_oracle(const MonomialIdeal& ideal);

/// Decomposition of a grid ideal by the oracle, validated against the shape
/// (x_{i,g_i} | i <= t) with g nondecreasing. Throws ConditionStarViolation.
std::vector<GridComponent> grid_decomposition(const GridIdeal& ideal);

/// Whether E satisfies the right-shift property (equivalently, whether the
/// intersection of the m^a is strongly stable).
bool right_shift_check(std::span<const IrreducibleComponent> components, std::size_t n);

MonomialIdeal intersect_components(std::span<const IrreducibleComponent> components, std::size_t n);
MonomialIdeal intersect_components(std::span<const GeneralComponent> components, std::size_t n);

/// Sorted, deduplicated, and with every component that contains another removed.
template <class Component>
std::vector<Component> irredundant(std::vector<Component> comps);

}  // namespace borel
