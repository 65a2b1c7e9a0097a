#include "borel/decompose.hpp"

#include "borel/errors.hpp"

#include <algorithm>
#include <string>

namespace borel {

IrreducibleComponent::IrreducibleComponent(std::vector<Exponent> a) : a_(std::move(a)) {
  if (a_.empty()) throw InputError("irreducible component needs t >= 1");
  if (std::find(a_.begin(), a_.end(), Exponent{0}) != a_.end())
    throw InputError("irreducible component exponents must be positive");
}

IrreducibleComponent::IrreducibleComponent(std::initializer_list<Exponent> a)
    : IrreducibleComponent(std::vector<Exponent>(a)) {}

long long IrreducibleComponent::w(std::size_t n) const noexcept {
  long long s = 0;
  for (auto x : a_) s += x;
  return static_cast<long long>(n) - s;
}

MonomialIdeal IrreducibleComponent::ideal(std::size_t n) const {
  if (t() > n) throw DimensionMismatch("component has more variables than the ring");
  std::vector<Monomial> gens;
  for (VarIndex i = 1; i <= t(); ++i) {
    std::vector<Exponent> e(n, 0);
    e[i - 1] = a_[i - 1];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(gens));
}

bool IrreducibleComponent::contains(const IrreducibleComponent& other) const noexcept {
  if (other.t() > t()) return false;
  for (std::size_t i = 0; i < other.t(); ++i)
    if (other.a_[i] < a_[i]) return false;
  return true;
}

std::strong_ordering operator<=>(const IrreducibleComponent& x, const IrreducibleComponent& y) {
  if (auto c = x.t() <=> y.t(); c != 0) return c;
  return x.a_ <=> y.a_;
}

GridComponent::GridComponent(std::vector<std::size_t> b) : b_(std::move(b)) {
  if (b_.empty()) throw InputError("grid component needs t >= 1");
  if (b_.front() < 1) throw InputError("grid component columns are 1-based");
  if (!std::is_sorted(b_.begin(), b_.end()))
    throw ConditionStarViolation("grid component columns must be nondecreasing");
}

GridComponent::GridComponent(std::initializer_list<std::size_t> b)
    : GridComponent(std::vector<std::size_t>(b)) {}

std::strong_ordering operator<=>(const GridComponent& x, const GridComponent& y) {
  if (auto c = x.t() <=> y.t(); c != 0) return c;
  return x.b_ <=> y.b_;
}

GeneralComponent::GeneralComponent(std::map<VarIndex, Exponent> powers)
    : powers_(std::move(powers)) {
  if (powers_.empty()) throw InputError("irreducible component must be proper");
  for (const auto& [v, e] : powers_)
    if (v < 1 || e < 1) throw InputError("invalid irreducible component");
}

MonomialIdeal GeneralComponent::ideal(std::size_t n) const {
  std::vector<Monomial> gens;
  for (const auto& [v, e] : powers_) {
    if (v > n) throw DimensionMismatch("component variable outside the ring");
    std::vector<Exponent> x(n, 0);
    x[v - 1] = e;
    gens.emplace_back(std::move(x));
  }
  return MonomialIdeal(n, std::move(gens));
}

bool GeneralComponent::contains(const GeneralComponent& other) const {
  for (const auto& [v, e] : other.powers_) {
    auto it = powers_.find(v);
    if (it == powers_.end() || e < it->second) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const GeneralComponent& x, const GeneralComponent& y) {
  if (auto c = x.height() <=> y.height(); c != 0) return c;
  return std::lexicographical_compare_three_way(x.powers_.begin(), x.powers_.end(),
                                                y.powers_.begin(), y.powers_.end());
}

GeneralComponent to_general(const IrreducibleComponent& a) {
  std::map<VarIndex, Exponent> p;
  for (VarIndex i = 1; i <= a.t(); ++i) p.emplace(i, a[i]);
  return GeneralComponent(std::move(p));
}

GeneralComponent to_general(const GridComponent& b, std::size_t cols) {
  std::map<VarIndex, Exponent> p;
  for (std::size_t i = 1; i <= b.t(); ++i) {
    if (b[i] > cols) throw DimensionMismatch("grid component column outside the grid");
    p.emplace((i - 1) * cols + b[i], 1);
  }
  return GeneralComponent(std::move(p));
}

std::optional<IrreducibleComponent> to_initial_segment(const GeneralComponent& c) {
  std::vector<Exponent> a;
  VarIndex expected = 1;
  for (const auto& [v, e] : c.powers()) {
    if (v != expected++) return std::nullopt;
    a.push_back(e);
  }
  return IrreducibleComponent(std::move(a));
}

template <class Component>
std::vector<Component> irredundant(std::vector<Component> comps) {
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  std::vector<Component> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j)
      redundant = i != j && comps[i].contains(comps[j]);
    if (!redundant) out.push_back(comps[i]);
  }
  return out;
}

template std::vector<IrreducibleComponent> irredundant(std::vector<IrreducibleComponent>);
template std::vector<GeneralComponent> irredundant(std::vector<GeneralComponent>);

std::vector<GridComponent> psi(const IrreducibleComponent& a) {
  const std::size_t t = a.t();
  std::vector<std::size_t> prefix;
  std::size_t low = 1;
  if (t > 1) {
    std::size_t sum = 0;
    for (std::size_t i = 1; i < t; ++i) {
      sum += a[i];
      prefix.push_back(sum - i + 1);
    }
    low = prefix.back();
  }
  std::vector<GridComponent> out;
  for (std::size_t c = low; c < low + a.e(); ++c) {
    auto b = prefix;
    b.push_back(c);
    out.emplace_back(std::move(b));
  }
  return out;
}

std::vector<IrreducibleComponent> top_components(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "top_components");
  require_strongly_stable(ideal, "top_components");
  const VarIndex l = ideal.nu();
  std::vector<IrreducibleComponent> out;
  for (const auto& g : ideal.generators()) {
    if (g.nu() != l) continue;
    std::vector<Exponent> hat;
    for (VarIndex i = 1; i < l; ++i) hat.push_back(g.exponent(i) + 1);
    hat.push_back(g.exponent(l));
    out.emplace_back(std::move(hat));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IrreducibleComponent> decompose_strongly_stable(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "decompose_strongly_stable");
  require_strongly_stable(ideal, "decompose_strongly_stable");
  std::vector<IrreducibleComponent> out;
  MonomialIdeal current = ideal;
  // Saturating by x_nu strictly lowers nu; (x_1^e) saturates to the unit ideal.
  while (!current.is_unit()) {
    auto top = top_components(current);
    out.insert(out.end(), top.begin(), top.end());
    current = saturate_variable(current, current.nu());
  }
  return irredundant(std::move(out));
}

std::vector<GridComponent> bpol_decomposition(std::span<const IrreducibleComponent> components) {
  std::vector<GridComponent> out;
  for (const auto& a : components) {
    auto part = psi(a);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool lex_greater(const Monomial& a, const Monomial& b) { return a > b; }

void split(const MonomialIdeal& ideal, std::vector<GeneralComponent>& leaves) {
  std::vector<Monomial> gens(ideal.generators().begin(), ideal.generators().end());
  std::sort(gens.begin(), gens.end(), lex_greater);
  for (const auto& m : gens) {
    const auto support = m.support();
    if (support.size() < 2) continue;
    const VarIndex k = support.back();
    std::vector<Exponent> pure(m.size(), 0);
    pure[k - 1] = m.exponent(k);
    const Monomial v(std::move(pure));
    const Monomial u = m / v;
    split(ideal.with_generator(u), leaves);
    split(ideal.with_generator(v), leaves);
    return;
  }
  std::map<VarIndex, Exponent> powers;
  for (const auto& g : gens) {
    const VarIndex v = g.support().front();
    powers.emplace(v, g.exponent(v));
  }
  leaves.emplace_back(std::move(powers));
}

}  // namespace

std::vector<GeneralComponent> decompose_oracle(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "decompose_oracle");
  std::vector<GeneralComponent> leaves;
  split(ideal, leaves);
  return irredundant(std::move(leaves));
}

std::vector<GridComponent> grid_decomposition(const GridIdeal& ideal) {
  std::vector<GridComponent> out;
  for (const auto& comp : decompose_oracle(ideal.flat())) {
    std::vector<std::size_t> b;
    std::size_t expected_row = 1;
    for (const auto& [v, e] : comp.powers()) {
      const std::size_t row = (v - 1) / ideal.cols() + 1;
      const std::size_t col = (v - 1) % ideal.cols() + 1;
      if (row != expected_row++ || (!b.empty() && col < b.back()))
        throw ConditionStarViolation(
            "b-pol component is not of the form (x_{i,g_i} | i <= t) with g nondecreasing");
      b.push_back(col);
    }
    out.emplace_back(std::move(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool right_shift_check(std::span<const IrreducibleComponent> components, std::size_t n) {
  for (const auto& a : components) {
    if (a.t() > n) throw DimensionMismatch("component has more variables than the ring");
    for (std::size_t i = 1; i <= a.t(); ++i) {
      if (a[i] <= 1) continue;
      for (std::size_t j = i + 1; j <= a.t(); ++j) {
        std::vector<Exponent> moved(a.exponents().begin(), a.exponents().end());
        --moved[i - 1];
        ++moved[j - 1];
        const IrreducibleComponent shifted(std::move(moved));
        const bool covered = std::any_of(components.begin(), components.end(),
                                         [&](const auto& b) { return shifted.contains(b); });
        if (!covered) return false;
      }
    }
  }
  return true;
}

namespace {

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.ambient(), std::move(gens));
}

template <class Component>
MonomialIdeal intersect_all(std::span<const Component> components, std::size_t n) {
  MonomialIdeal out = MonomialIdeal::unit(n);
  for (const auto& c : components) out = intersect(out, c.ideal(n));
  return out;
}

}  // namespace

MonomialIdeal intersect_components(std::span<const IrreducibleComponent> components,
                                   std::size_t n) {
  return intersect_all(components, n);
}

MonomialIdeal intersect_components(std::span<const GeneralComponent> components, std::size_t n) {
  return intersect_all(components, n);
}

}  // namespace borel
