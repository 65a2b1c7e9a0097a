#pragma once

#include "borel/monomial.hpp"

#include <map>
#include <string>

namespace borel {

/// Laurent polynomial in a single variable lambda: exponent -> coefficient.
/// Zero coefficients are never stored.
using Laurent = std::map<int, Integer>;

namespace laurent {

void add_term(Laurent& p, int exponent, const Integer& coefficient);
Laurent add(const Laurent& a, const Laurent& b);
Laurent negate(const Laurent& p);
Laurent multiply(const Laurent& a, const Laurent& b);
Laurent shift(const Laurent& p, int by);
/// p * (1 - lambda)^k, k >= 0.
Laurent times_one_minus_lambda(Laurent p, unsigned k);
Integer evaluate_at_one(const Laurent& p);
/// lambda -> lambda^{-1}.
Laurent invert_variable(const Laurent& p);

}  // namespace laurent

/// numerator / (1 - lambda)^k with an exact Laurent numerator.
///
/// Always kept in canonical form: when k > 0 the numerator does not vanish
/// at lambda = 1, and the zero series has k = 0. Two series are equal as
/// rational functions iff they compare equal.
class RationalSeries {
 public:
  RationalSeries() = default;
  RationalSeries(Laurent numerator, unsigned denominator_power);

  /// c * lambda^exponent / (1 - lambda)^k; a negative k multiplies by
  /// (1 - lambda)^{-k}.
  static RationalSeries term(const Integer& c, int exponent, int k);

  const Laurent& numerator() const noexcept { return numerator_; }
  unsigned denominator_power() const noexcept { return denominator_power_; }
  bool is_zero() const noexcept { return numerator_.empty(); }

  RationalSeries operator+(const RationalSeries& other) const;
  RationalSeries operator-(const RationalSeries& other) const;
  RationalSeries operator-() const;
  RationalSeries& operator+=(const RationalSeries& other);
  RationalSeries scaled(const Integer& c) const;
  /// Multiplies by lambda^by.
  RationalSeries shifted(int by) const;
  /// Multiplies by (1 - lambda)^k; k may be negative.
  RationalSeries times_one_minus_lambda(int k) const;
  /// The rational function obtained by substituting lambda^{-1} for lambda.
  RationalSeries inverted() const;

  /// Numerator evaluated at lambda = 1 (the multiplicity when the series is
  /// a Hilbert series of Krull dimension denominator_power()).
  Integer numerator_at_one() const;

  /// Power series coefficients in lambda from the lowest numerator exponent
  /// up to and including max_exponent.
  Laurent expand(int max_exponent) const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  void canonicalize();

  Laurent numerator_;
  unsigned denominator_power_ = 0;
};

/// "num / (1-λ)^k" with explicit Laurent terms, e.g. "λ^-2 + 2λ^-1".
std::string to_string(const RationalSeries& s);
std::string to_string(const Laurent& p);

}  // namespace borel
