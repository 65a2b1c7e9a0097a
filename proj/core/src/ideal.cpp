#include "borel/ideal.hpp"

#include "borel/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace borel {

namespace {

void require_arity(const Monomial& m, std::size_t n) {
  if (m.size() != n)
    throw DimensionMismatch("monomial has " + std::to_string(m.size()) +
                            " exponents, ring has " + std::to_string(n) + " variables");
}

void require_index(VarIndex l, std::size_t n) {
  if (l < 1 || l > n)
    throw InputError("variable index " + std::to_string(l) + " out of range 1.." +
                     std::to_string(n));
}

std::vector<Monomial> minimal_sorted(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& m : gens) {
    // A divisor has degree <= deg m and so was already visited.
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  return kept;
}

// K-polynomial of S/I: H(S/I) = K / (1-λ)^n.
Laurent k_polynomial(const std::vector<Monomial>& gens) {
  Laurent one{{0, Integer(1)}};
  if (gens.empty()) return one;
  if (gens.front().is_one()) return {};

  const std::size_t n = gens.front().size();
  std::vector<unsigned> occurrences(n, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i)
      if (g.exponents()[i] > 0) ++occurrences[i];

  const auto pivot_var =
      static_cast<std::size_t>(std::max_element(occurrences.begin(), occurrences.end()) -
                               occurrences.begin());
  if (occurrences[pivot_var] <= 1) {
    // Pairwise coprime generators: a regular sequence.
    Laurent k = one;
    for (const auto& g : gens)
      k = laurent::add(k, laurent::negate(laurent::shift(k, static_cast<int>(g.degree()))));
    return k;
  }

  Exponent e = 0;
  for (const auto& g : gens) {
    const Exponent gi = g.exponents()[pivot_var];
    if (gi > 0 && (e == 0 || gi < e)) e = gi;
  }
  std::vector<Exponent> pe(n, 0);
  pe[pivot_var] = e;
  const Monomial pivot(std::move(pe));

  // 0 -> S/(I:p)(-deg p) -> S/I -> S/(I + (p)) -> 0
  std::vector<Monomial> sum_gens(gens.begin(), gens.end());
  sum_gens.push_back(pivot);
  std::vector<Monomial> colon_gens;
  colon_gens.reserve(gens.size());
  for (const auto& g : gens) colon_gens.push_back(lcm(g, pivot) / pivot);

  auto with_pivot = k_polynomial(minimal_sorted(std::move(sum_gens)));
  auto quotient = k_polynomial(minimal_sorted(std::move(colon_gens)));
  return laurent::add(with_pivot, laurent::shift(quotient, static_cast<int>(e)));
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t n) : n_(n) {
  if (n == 0) throw InputError("ambient dimension must be positive");
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : MonomialIdeal(n) {
  for (const auto& g : gens) require_arity(g, n);
  gens_ = minimal_sorted(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) { return MonomialIdeal(n, {Monomial::one(n)}); }

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& m) { return m.is_squarefree(); });
}

std::uint64_t MonomialIdeal::max_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

VarIndex MonomialIdeal::nu() const noexcept {
  VarIndex l = 0;
  for (const auto& g : gens_) l = std::max(l, g.nu());
  return l;
}

MonomialIdeal MonomialIdeal::with_generator(const Monomial& m) const {
  auto gens = gens_;
  gens.push_back(m);
  return MonomialIdeal(n_, std::move(gens));
}

MonomialIdeal MonomialIdeal::extended(std::size_t m) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.extended(m));
  return MonomialIdeal(m, std::move(gens));
}

MonomialIdeal minimalize(std::span<const Monomial> gens, std::size_t n) {
  return MonomialIdeal(n, std::vector<Monomial>(gens.begin(), gens.end()));
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  require_arity(m, ideal.ambient());
  const auto gens = ideal.generators();
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool is_subideal(const MonomialIdeal& ideal, const MonomialIdeal& other) {
  if (ideal.ambient() != other.ambient()) throw DimensionMismatch("ideals in different rings");
  const auto gens = ideal.generators();
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Monomial& g) { return contains(other, g); });
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
  for (const auto& m : ideal.generators())
    for (VarIndex i = 2; i <= m.size(); ++i) {
      if (m.exponent(i) == 0) continue;
      for (VarIndex j = 1; j < i; ++j)
        if (!contains(ideal, m.shift(i, j))) return false;
    }
  return true;
}

MonomialIdeal borel_closure(std::span<const Monomial> gens, std::size_t n) {
  std::set<Monomial> seen;
  std::vector<Monomial> stack;
  for (const auto& g : gens) {
    require_arity(g, n);
    if (seen.insert(g).second) stack.push_back(g);
  }
  // Adjacent moves x_i -> x_{i-1} generate every left shift.
  while (!stack.empty()) {
    const Monomial m = std::move(stack.back());
    stack.pop_back();
    for (VarIndex i = 2; i <= n; ++i) {
      if (m.exponent(i) == 0) continue;
      auto shifted = m.shift(i, i - 1);
      if (seen.insert(shifted).second) stack.push_back(std::move(shifted));
    }
  }
  return MonomialIdeal(n, std::vector<Monomial>(seen.begin(), seen.end()));
}

MonomialIdeal colon_variable(const MonomialIdeal& ideal, VarIndex l) {
  require_index(l, ideal.ambient());
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& m : ideal.generators())
    gens.push_back(m.exponent(l) > 0 ? m.divide_variable(l) : m);
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

MonomialIdeal colon_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  require_arity(m, ideal.ambient());
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(lcm(g, m) / m);
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

MonomialIdeal saturate_variable(const MonomialIdeal& ideal, VarIndex l) {
  require_index(l, ideal.ambient());
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& m : ideal.generators()) {
    auto e = std::vector<Exponent>(m.exponents().begin(), m.exponents().end());
    e[l - 1] = 0;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

MonomialIdeal restrict_away_last(const MonomialIdeal& ideal) {
  const auto n = ideal.ambient();
  std::vector<Monomial> gens;
  for (const auto& m : ideal.generators())
    if (m.exponent(n) == 0) gens.push_back(m);
  return MonomialIdeal(n, std::move(gens));
}

void require_proper_nonzero(const MonomialIdeal& ideal, const char* operation) {
  if (ideal.is_zero()) throw DegenerateIdeal(std::string(operation) + ": zero ideal");
  if (ideal.is_unit()) throw DegenerateIdeal(std::string(operation) + ": unit ideal");
}

void require_strongly_stable(const MonomialIdeal& ideal, const char* operation) {
  if (!is_strongly_stable(ideal))
    throw NotStronglyStable(std::string(operation) + ": ideal is not strongly stable");
}

std::size_t height(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "height");
  require_strongly_stable(ideal, "height");
  // sqrt(I) = (x_1, ..., x_c), and x_i in sqrt(I) iff a pure power of x_i
  // is a minimal generator.
  std::size_t c = 0;
  for (const auto& m : ideal.generators()) {
    const auto support = m.support();
    if (support.size() == 1) c = std::max(c, support.front());
  }
  return c;
}

std::size_t proj_dim_quotient(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "proj_dim_quotient");
  require_strongly_stable(ideal, "proj_dim_quotient");
  return ideal.nu();
}

bool is_cohen_macaulay(const MonomialIdeal& ideal) {
  return proj_dim_quotient(ideal) == height(ideal);
}

RationalSeries hilbert_series_quotient(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens(ideal.generators().begin(), ideal.generators().end());
  return RationalSeries(k_polynomial(gens), static_cast<unsigned>(ideal.ambient()));
}

}  // namespace borel
