#include "borel/series.hpp"

#include <sstream>
#include <utility>

namespace borel {

namespace laurent {

void add_term(Laurent& p, int exponent, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = p.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) p.erase(it);
  }
}

Laurent add(const Laurent& a, const Laurent& b) {
  Laurent r = a;
  for (const auto& [e, c] : b) add_term(r, e, c);
  return r;
}

Laurent negate(const Laurent& p) {
  Laurent r;
  for (const auto& [e, c] : p) r.emplace(e, -c);
  return r;
}

Laurent multiply(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_term(r, ea + eb, ca * cb);
  return r;
}

Laurent shift(const Laurent& p, int by) {
  Laurent r;
  for (const auto& [e, c] : p) r.emplace_hint(r.end(), e + by, c);
  return r;
}

Laurent times_one_minus_lambda(Laurent p, unsigned k) {
  for (unsigned step = 0; step < k; ++step) {
    Laurent next = p;
    for (const auto& [e, c] : p) add_term(next, e + 1, -c);
    p = std::move(next);
  }
  return p;
}

Integer evaluate_at_one(const Laurent& p) {
  Integer s = 0;
  for (const auto& [e, c] : p) s += c;
  return s;
}

Laurent invert_variable(const Laurent& p) {
  Laurent r;
  for (const auto& [e, c] : p) r.emplace(-e, c);
  return r;
}

}  // namespace laurent

namespace {

// Quotient of p by (1 - lambda); requires p(1) == 0.
Laurent divide_one_minus_lambda(const Laurent& p) {
  Laurent q;
  if (p.empty()) return q;
  const int lo = p.begin()->first;
  const int hi = p.rbegin()->first;
  Integer running = 0;
  for (int e = lo; e < hi; ++e) {
    if (auto it = p.find(e); it != p.end()) running += it->second;
    if (running != 0) q.emplace_hint(q.end(), e, running);
  }
  return q;
}

Integer binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

RationalSeries::RationalSeries(Laurent numerator, unsigned denominator_power)
    : numerator_(std::move(numerator)), denominator_power_(denominator_power) {
  canonicalize();
}

void RationalSeries::canonicalize() {
  for (auto it = numerator_.begin(); it != numerator_.end();) {
    if (it->second == 0)
      it = numerator_.erase(it);
    else
      ++it;
  }
  while (denominator_power_ > 0 && !numerator_.empty() &&
         laurent::evaluate_at_one(numerator_) == 0) {
    numerator_ = divide_one_minus_lambda(numerator_);
    --denominator_power_;
  }
  if (numerator_.empty()) denominator_power_ = 0;
}

RationalSeries RationalSeries::term(const Integer& c, int exponent, int k) {
  Laurent p;
  laurent::add_term(p, exponent, c);
  if (k >= 0) return RationalSeries(std::move(p), static_cast<unsigned>(k));
  return RationalSeries(laurent::times_one_minus_lambda(std::move(p), static_cast<unsigned>(-k)),
                        0);
}

RationalSeries RationalSeries::operator+(const RationalSeries& other) const {
  const unsigned k = std::max(denominator_power_, other.denominator_power_);
  auto a = laurent::times_one_minus_lambda(numerator_, k - denominator_power_);
  auto b = laurent::times_one_minus_lambda(other.numerator_, k - other.denominator_power_);
  return RationalSeries(laurent::add(a, b), k);
}

RationalSeries RationalSeries::operator-() const {
  RationalSeries r = *this;
  r.numerator_ = laurent::negate(numerator_);
  return r;
}

RationalSeries RationalSeries::operator-(const RationalSeries& other) const {
  return *this + (-other);
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& other) {
  *this = *this + other;
  return *this;
}

RationalSeries RationalSeries::scaled(const Integer& c) const {
  Laurent p;
  for (const auto& [e, coeff] : numerator_) laurent::add_term(p, e, coeff * c);
  return RationalSeries(std::move(p), denominator_power_);
}

RationalSeries RationalSeries::shifted(int by) const {
  return RationalSeries(laurent::shift(numerator_, by), denominator_power_);
}

RationalSeries RationalSeries::times_one_minus_lambda(int k) const {
  if (k <= 0) {
    return RationalSeries(numerator_, denominator_power_ + static_cast<unsigned>(-k));
  }
  const auto uk = static_cast<unsigned>(k);
  if (uk <= denominator_power_) return RationalSeries(numerator_, denominator_power_ - uk);
  return RationalSeries(laurent::times_one_minus_lambda(numerator_, uk - denominator_power_), 0);
}

// N(1/λ) / (1 - 1/λ)^k = (-1)^k λ^k N(1/λ) / (1 - λ)^k
RationalSeries RationalSeries::inverted() const {
  const int k = static_cast<int>(denominator_power_);
  auto p = laurent::shift(laurent::invert_variable(numerator_), k);
  if (k % 2 != 0) p = laurent::negate(p);
  return RationalSeries(std::move(p), denominator_power_);
}

Integer RationalSeries::numerator_at_one() const { return laurent::evaluate_at_one(numerator_); }

Laurent RationalSeries::expand(int max_exponent) const {
  Laurent out;
  if (numerator_.empty()) return out;
  const int lo = numerator_.begin()->first;
  const long long k = denominator_power_;
  for (int m = lo; m <= max_exponent; ++m) {
    Integer c = 0;
    for (const auto& [e, coeff] : numerator_) {
      if (e > m) break;
      const long long p = m - e;
      c += coeff * (k == 0 ? Integer(p == 0 ? 1 : 0) : binomial(p + k - 1, k - 1));
    }
    laurent::add_term(out, m, c);
  }
  return out;
}

std::string to_string(const Laurent& p) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (e == 0) {
      out << magnitude;
      continue;
    }
    if (magnitude != 1) out << magnitude;
    out << "λ";
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

std::string to_string(const RationalSeries& s) {
  const auto num = to_string(s.numerator());
  if (s.denominator_power() == 0) return num;
  std::string out = s.numerator().size() > 1 ? "(" + num + ")" : num;
  out += " / (1-λ)";
  if (s.denominator_power() > 1) out += "^" + std::to_string(s.denominator_power());
  return out;
}

}  // namespace borel
