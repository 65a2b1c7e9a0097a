#include "borel/duality.hpp"

#include "borel/errors.hpp"

#include <algorithm>
#include <string>

namespace borel {

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw NotSquarefree("Alexander duality needs a squarefree ideal");
  const auto n = ideal.ambient();
  if (ideal.is_zero()) return MonomialIdeal::unit(n);
  if (ideal.is_unit()) return MonomialIdeal::zero(n);
  std::vector<Monomial> gens;
  for (const auto& comp : decompose_oracle(ideal)) {
    std::vector<Exponent> e(n, 0);
    for (const auto& [v, power] : comp.powers()) e[v - 1] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(gens));
}

GridIdeal alexander_dual(const GridIdeal& ideal) {
  return GridIdeal(ideal.rows(), ideal.cols(), alexander_dual(ideal.flat()));
}

namespace {

std::size_t checked_columns(const MonomialIdeal& ideal, std::optional<std::size_t> d) {
  const std::size_t cols = d.value_or(default_columns(ideal));
  if (ideal.max_degree() > cols)
    throw DegreeBoundExceeded("generator degree " + std::to_string(ideal.max_degree()) +
                              " exceeds d = " + std::to_string(cols));
  return cols;
}

}  // namespace

MonomialIdeal star_dual(const MonomialIdeal& ideal, std::optional<std::size_t> d) {
  require_proper_nonzero(ideal, "star_dual");
  require_strongly_stable(ideal, "star_dual");
  const std::size_t cols = checked_columns(ideal, d);
  const auto components = decompose_strongly_stable(ideal);
  std::vector<Monomial> gens;
  for (const auto& b : bpol_decomposition(components)) {
    std::vector<Exponent> e(cols, 0);
    for (auto col : b.columns()) {
      if (col > cols) throw Error("star_dual: component column outside the grid");
      ++e[col - 1];
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(cols, std::move(gens));
}

GridIdeal star_dual_witness(const MonomialIdeal& ideal, std::optional<std::size_t> d) {
  require_strongly_stable(ideal, "star_dual_witness");
  return transpose(alexander_dual(bpol_ideal(ideal, checked_columns(ideal, d))));
}

bool star_dual_identity_holds(const MonomialIdeal& ideal, std::optional<std::size_t> d) {
  const std::size_t cols = checked_columns(ideal, d);
  const auto dual = star_dual(ideal, cols);
  return bpol_ideal(dual, ideal.ambient()) == star_dual_witness(ideal, cols);
}

Monomial sigma_monomial(const Monomial& m) {
  const std::size_t n = m.size();
  const std::size_t e = std::max<std::size_t>(1, m.degree());
  std::vector<Exponent> out(n + e - 1, 0);
  std::size_t position = 0;
  for (VarIndex i = 1; i <= n; ++i)
    for (Exponent k = 0; k < m.exponent(i); ++k) out[i - 1 + position++] = 1;
  return Monomial(std::move(out));
}

MonomialIdeal sigma_ideal(const MonomialIdeal& ideal, std::optional<std::size_t> d) {
  require_strongly_stable(ideal, "sigma_ideal");
  const std::size_t cols = checked_columns(ideal, d);
  const std::size_t big_n = ideal.ambient() + cols - 1;
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    auto s = sigma_monomial(g);
    gens.push_back(s.extended(big_n));
  }
  return MonomialIdeal(big_n, std::move(gens));
}

std::vector<GeneralComponent> sigma_decomposition(
    std::span<const IrreducibleComponent> components) {
  std::vector<GeneralComponent> out;
  for (const auto& b : bpol_decomposition(components)) {
    std::map<VarIndex, Exponent> support;
    for (std::size_t i = 1; i <= b.t(); ++i) support.emplace(b[i] + i - 1, 1);
    out.emplace_back(std::move(support));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_squarefree_strongly_stable(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw NotSquarefree("expected a squarefree ideal");
  for (const auto& m : ideal.generators())
    for (VarIndex i = 2; i <= m.size(); ++i) {
      if (m.exponent(i) == 0) continue;
      for (VarIndex j = 1; j < i; ++j)
        if (m.exponent(j) == 0 && !contains(ideal, m.shift(i, j))) return false;
    }
  return true;
}

bool ideal_equiv(const MonomialIdeal& a, const MonomialIdeal& b) {
  const std::size_t m = std::max(a.ambient(), b.ambient());
  return a.extended(m) == b.extended(m);
}

}  // namespace borel
