#include "borel/monomial.hpp"

#include "borel/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace borel {

namespace {

void require_same_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("monomials live in " + std::to_string(a.size()) +
                            " and " + std::to_string(b.size()) + " variables");
}

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b)
    throw InputError("exponent overflow");
  return a + b;
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}

Monomial::Monomial(std::initializer_list<Exponent> exponents) : exponents_(exponents) {}

Monomial Monomial::one(std::size_t n) { return Monomial(std::vector<Exponent>(n, 0)); }

Monomial Monomial::variable(std::size_t n, VarIndex i) {
  if (i < 1 || i > n)
    throw InputError("variable index " + std::to_string(i) + " out of range 1.." +
                     std::to_string(n));
  std::vector<Exponent> e(n, 0);
  e[i - 1] = 1;
  return Monomial(std::move(e));
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (auto e : exponents_) d += e;
  return d;
}

VarIndex Monomial::nu() const noexcept {
  for (std::size_t i = exponents_.size(); i > 0; --i)
    if (exponents_[i - 1] > 0) return i;
  return 0;
}

std::vector<VarIndex> Monomial::support() const {
  std::vector<VarIndex> s;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > 0) s.push_back(i + 1);
  return s;
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_size(*this, other);
  std::vector<Exponent> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(exponents_[i], other.exponents_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw InputError("inexact monomial division");
  std::vector<Exponent> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponents_[i] - other.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::times_variable(VarIndex i) const {
  if (i < 1 || i > size()) throw InputError("variable index out of range");
  auto e = exponents_;
  e[i - 1] = checked_add(e[i - 1], 1);
  return Monomial(std::move(e));
}

Monomial Monomial::divide_variable(VarIndex i) const {
  if (i < 1 || i > size()) throw InputError("variable index out of range");
  if (exponents_[i - 1] == 0) throw InputError("inexact monomial division");
  auto e = exponents_;
  --e[i - 1];
  return Monomial(std::move(e));
}

Monomial Monomial::shift(VarIndex from, VarIndex to) const {
  return divide_variable(from).times_variable(to);
}

Monomial Monomial::extended(std::size_t n) const {
  if (n < size()) throw DimensionMismatch("cannot shrink a monomial's ring");
  auto e = exponents_;
  e.resize(n, 0);
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponents_[i], b.exponents_[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exponents_[i], b.exponents_[i]);
  return Monomial(std::move(e));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a > b;
}

}  // namespace borel
