#pragma once

#include "borel/monomial.hpp"
#include "borel/series.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace borel {

/// A monomial ideal of k[x_1, ..., x_n] given by its minimal generators.
///
/// The ambient dimension is always explicit. Generators are kept minimal
/// (a divisibility antichain) and sorted by canonical_less. The zero ideal
/// has no generators, the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  /// The zero ideal of k[x_1..x_n].
  explicit MonomialIdeal(std::size_t n);
  /// Minimalizes gens. Throws DimensionMismatch if a generator has the
  /// wrong arity.
  MonomialIdeal(std::size_t n, std::vector<Monomial> gens);

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n);

  std::size_t ambient() const noexcept { return n_; }
  std::span<const Monomial> generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const;
  std::uint64_t max_degree() const noexcept;
  /// max nu over G(I); 0 for the zero and unit ideals.
  VarIndex nu() const noexcept;

  /// I + (m).
  MonomialIdeal with_generator(const Monomial& m) const;
  /// The same generators in k[x_1..x_m], m >= ambient().
  MonomialIdeal extended(std::size_t m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(std::span<const Monomial> gens, std::size_t n);

bool contains(const MonomialIdeal& ideal, const Monomial& m);
/// I ⊆ J (same ambient dimension).
bool is_subideal(const MonomialIdeal& ideal, const MonomialIdeal& other);

bool is_strongly_stable(const MonomialIdeal& ideal);

/// Smallest strongly stable ideal containing gens.
MonomialIdeal borel_closure(std::span<const Monomial> gens, std::size_t n);

/// I : x_l.
MonomialIdeal colon_variable(const MonomialIdeal& ideal, VarIndex l);
/// I : m for a monomial m.
MonomialIdeal colon_monomial(const MonomialIdeal& ideal, const Monomial& m);
/// I : x_l^infinity.
MonomialIdeal saturate_variable(const MonomialIdeal& ideal, VarIndex l);
/// Ideal generated by the generators of I not divisible by x_n.
MonomialIdeal restrict_away_last(const MonomialIdeal& ideal);

/// The following require a strongly stable ideal that is neither zero nor
/// the unit ideal (NotStronglyStable / DegenerateIdeal otherwise).
std::size_t height(const MonomialIdeal& ideal);
std::size_t proj_dim_quotient(const MonomialIdeal& ideal);
bool is_cohen_macaulay(const MonomialIdeal& ideal);

/// H(S/I, λ) in canonical form.
RationalSeries hilbert_series_quotient(const MonomialIdeal& ideal);

/// Throws NotStronglyStable or DegenerateIdeal as appropriate.
void require_strongly_stable(const MonomialIdeal& ideal, const char* operation);
void require_proper_nonzero(const MonomialIdeal& ideal, const char* operation);

}  // namespace borel
