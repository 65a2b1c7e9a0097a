#pragma once

#include "borel/decompose.hpp"
#include "borel/ideal.hpp"
#include "borel/polarize.hpp"
#include "borel/series.hpp"

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace borel {

/// Graded Betti numbers beta_{i,j} of an ideal (not of its quotient):
/// beta_{0,j} counts the minimal generators of degree j. Absent entries are 0.
class BettiTable {
 public:
  using Key = std::pair<int, int>;

  void add(int i, int j, const Integer& value);
  Integer operator()(int i, int j) const;
  const std::map<Key, Integer>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<Key, Integer> entries_;
};

/// Entry i is H(H_m^i(S/I), λ^{-1}); indices with a zero series are absent.
using LocalCohSeries = std::map<std::size_t, RationalSeries>;

/// Eliahou–Kervaire: beta_{i,i+j}(I) = sum over degree-j generators m of
/// binom(nu(m) - 1, i). Requires I strongly stable.
BettiTable ek_betti(const MonomialIdeal& ideal);

inline constexpr std::size_t kBettiOracleMaxGenerators = 12;

/// Betti numbers from the reduced homology of the open intervals (1, m) of
/// the lcm lattice, computed over the rationals. Throws OracleSizeExceeded
/// above kBettiOracleMaxGenerators generators.
BettiTable betti_oracle(const MonomialIdeal& ideal);
BettiTable betti_oracle(const GridIdeal& ideal);

/// Local cohomology series from the Betti numbers of the dual I*:
/// entry i = sum_j beta_{i-j, n-j}(I*) λ^j / (1-λ)^j.
LocalCohSeries lc_series_via_dual(const MonomialIdeal& ideal,
                                  std::optional<std::size_t> d = std::nullopt);
/// Entry n - t(a) receives (λ^{w(a)} + ... + λ^{w(a)+e(a)-1}) / (1-λ)^{n-t(a)}.
LocalCohSeries lc_series_via_components(std::span<const IrreducibleComponent> components,
                                        std::size_t n);
/// Entry n - t receives λ^{i - last + 1} / (1-λ)^i per grid component.
LocalCohSeries lc_series_via_gamma(std::span<const GridComponent> components, std::size_t n);

struct ArithmeticDegree {
  /// adeg_i(S/I) for every i with a nonzero contribution.
  std::map<std::size_t, Integer> strata;
  Integer total;
  /// deg(S/I): contribution of the components of minimal height.
  Integer degree;
};

ArithmeticDegree adeg(std::span<const IrreducibleComponent> components, std::size_t n);

/// adeg_{n - nu(I)}(S/I) read directly off G(I) as the sum of a_nu over the
/// generators with nu(x^a) = nu(I).
Integer adeg_top_stratum(const MonomialIdeal& ideal);

/// deg(S/I) from the canonical Hilbert series: its numerator at λ = 1.
Integer degree_from_hilbert_series(const MonomialIdeal& ideal);

/// Every nonzero beta_{i,j} of the EK table has j - i equal to a common value.
bool has_linear_resolution(const MonomialIdeal& ideal);
/// S/I is Cohen–Macaulay iff I* has a linear resolution.
bool is_cm_via_dual(const MonomialIdeal& ideal, std::optional<std::size_t> d = std::nullopt);

/// omega(m) = X~ / mu(m) for the generators with nu(m) = ht(I), where
/// mu(x^a) = (prod_{i < nu} x_{i, b_i + 1}) b-pol(x^a) and b_i are the partial
/// sums of a. Requires I strongly stable, Cohen–Macaulay, proper and nonzero.
std::vector<GridMonomial> canonical_generators(const MonomialIdeal& ideal,
                                               std::optional<std::size_t> d = std::nullopt);

/// sum_i (-1)^i H(H_m^i(S/I), λ^{-1}) == H(S/I, λ^{-1}).
bool euler_consistency(const MonomialIdeal& ideal, std::optional<std::size_t> d = std::nullopt);

}  // namespace borel
