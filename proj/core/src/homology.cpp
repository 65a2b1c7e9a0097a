#include "borel/homology.hpp"

#include "borel/duality.hpp"
#include "borel/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace borel {

void BettiTable::add(int i, int j, const Integer& value) {
  if (value == 0) return;
  auto& slot = entries_[{i, j}];
  slot += value;
  if (slot == 0) entries_.erase({i, j});
}

Integer BettiTable::operator()(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Integer(0) : it->second;
}

namespace {

Integer binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

using Rational = boost::multiprecision::cpp_rational;

std::size_t rank_over_rationals(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Reduced Betti numbers of the simplicial complex whose faces are the given
// vertex bitmasks (closed under subsets, including the empty face).
std::map<int, std::size_t> reduced_homology(const std::vector<std::uint32_t>& faces) {
  std::map<int, std::vector<std::uint32_t>> by_dim;
  for (auto f : faces) by_dim[std::popcount(f) - 1].push_back(f);

  std::map<int, std::size_t> boundary_rank;  // rank of d_q : C_q -> C_{q-1}
  for (const auto& [q, cells] : by_dim) {
    if (q < 0) continue;
    const auto& lower = by_dim[q - 1];
    std::map<std::uint32_t, std::size_t> index;
    for (std::size_t k = 0; k < lower.size(); ++k) index.emplace(lower[k], k);
    std::vector<std::vector<Rational>> matrix(cells.size(), std::vector<Rational>(lower.size()));
    for (std::size_t r = 0; r < cells.size(); ++r) {
      int position = 0;
      for (std::uint32_t rest = cells[r]; rest != 0; rest &= rest - 1, ++position) {
        const std::uint32_t vertex = rest & (~rest + 1);
        matrix[r][index.at(cells[r] & ~vertex)] = (position % 2 == 0) ? 1 : -1;
      }
    }
    boundary_rank[q] = rank_over_rationals(std::move(matrix));
  }

  std::map<int, std::size_t> out;
  for (const auto& [q, cells] : by_dim) {
    const std::size_t outgoing = q >= 0 ? boundary_rank[q] : 0;
    const std::size_t incoming = boundary_rank.count(q + 1) ? boundary_rank[q + 1] : 0;
    const std::size_t h = cells.size() - outgoing - incoming;
    if (h != 0) out.emplace(q, h);
  }
  return out;
}

}  // namespace

BettiTable ek_betti(const MonomialIdeal& ideal) {
  require_strongly_stable(ideal, "ek_betti");
  BettiTable table;
  if (ideal.is_unit()) {
    table.add(0, 0, 1);
    return table;
  }
  for (const auto& m : ideal.generators()) {
    const auto j = static_cast<int>(m.degree());
    const auto nu = static_cast<long long>(m.nu());
    for (int i = 0; i < nu; ++i) table.add(i, i + j, binomial(nu - 1, i));
  }
  return table;
}

BettiTable betti_oracle(const MonomialIdeal& ideal) {
  BettiTable table;
  if (ideal.is_zero()) return table;
  if (ideal.is_unit()) {
    table.add(0, 0, 1);
    return table;
  }
  const auto gens = ideal.generators();
  const std::size_t r = gens.size();
  if (r > kBettiOracleMaxGenerators)
    throw OracleSizeExceeded("betti_oracle supports at most " +
                             std::to_string(kBettiOracleMaxGenerators) + " generators, got " +
                             std::to_string(r));

  // Elements of the lcm lattice other than its bottom element 1.
  std::vector<Monomial> lcms(std::size_t{1} << r, Monomial::one(ideal.ambient()));
  for (std::uint32_t mask = 1; mask < lcms.size(); ++mask) {
    const int low = std::countr_zero(mask);
    lcms[mask] = lcm(lcms[mask & (mask - 1)], gens[low]);
  }
  std::vector<Monomial> lattice(lcms.begin() + 1, lcms.end());
  std::sort(lattice.begin(), lattice.end());
  lattice.erase(std::unique(lattice.begin(), lattice.end()), lattice.end());

  for (const auto& top : lattice) {
    // Atom crosscut complex of [1, top]: sets of generators dividing top
    // whose lcm is a proper divisor of top.
    std::vector<std::size_t> atoms;
    for (std::size_t k = 0; k < r; ++k)
      if (gens[k].divides(top)) atoms.push_back(k);
    const std::size_t a = atoms.size();
    std::vector<Monomial> local(std::size_t{1} << a, Monomial::one(ideal.ambient()));
    std::vector<std::uint32_t> faces{0};
    for (std::uint32_t mask = 1; mask < local.size(); ++mask) {
      local[mask] = lcm(local[mask & (mask - 1)], gens[atoms[std::countr_zero(mask)]]);
      if (local[mask] != top) faces.push_back(mask);
    }
    const int degree = static_cast<int>(top.degree());
    for (const auto& [q, h] : reduced_homology(faces)) table.add(q + 1, degree, h);
  }
  return table;
}

BettiTable betti_oracle(const GridIdeal& ideal) { return betti_oracle(ideal.flat()); }

namespace {

void accumulate(LocalCohSeries& series, std::size_t i, const RationalSeries& contribution) {
  auto& slot = series[i];
  slot += contribution;
  if (slot.is_zero()) series.erase(i);
}

}  // namespace

LocalCohSeries lc_series_via_dual(const MonomialIdeal& ideal, std::optional<std::size_t> d) {
  require_proper_nonzero(ideal, "lc_series_via_dual");
  require_strongly_stable(ideal, "lc_series_via_dual");
  const auto n = static_cast<int>(ideal.ambient());
  const auto betti = ek_betti(star_dual(ideal, d));
  LocalCohSeries series;
  // beta_{p,q}(I*) sits at j = n - q, i = p + j.
  for (const auto& [key, value] : betti.entries()) {
    const auto [p, q] = key;
    const int j = n - q;
    const int i = p + j;
    if (i < 0 || i > n)
      throw Error("lc_series_via_dual: Betti number of I* outside the cohomological range");
    accumulate(series, static_cast<std::size_t>(i), RationalSeries::term(value, j, j));
  }
  return series;
}

LocalCohSeries lc_series_via_components(std::span<const IrreducibleComponent> components,
                                        std::size_t n) {
  LocalCohSeries series;
  for (const auto& a : components) {
    if (a.t() > n) throw DimensionMismatch("component has more variables than the ring");
    const std::size_t i = n - a.t();
    const auto w = static_cast<int>(a.w(n));
    Laurent numerator;
    for (Exponent k = 0; k < a.e(); ++k) laurent::add_term(numerator, w + static_cast<int>(k), 1);
    accumulate(series, i, RationalSeries(std::move(numerator), static_cast<unsigned>(i)));
  }
  return series;
}

LocalCohSeries lc_series_via_gamma(std::span<const GridComponent> components, std::size_t n) {
  LocalCohSeries series;
  for (const auto& b : components) {
    if (b.t() > n) throw DimensionMismatch("component has more rows than the ring");
    const std::size_t i = n - b.t();
    const int exponent = static_cast<int>(i) - static_cast<int>(b.last()) + 1;
    accumulate(series, i, RationalSeries::term(1, exponent, static_cast<int>(i)));
  }
  return series;
}

ArithmeticDegree adeg(std::span<const IrreducibleComponent> components, std::size_t n) {
  ArithmeticDegree out;
  std::size_t min_height = n + 1;
  for (const auto& a : components) {
    if (a.t() > n) throw DimensionMismatch("component has more variables than the ring");
    out.strata[n - a.t()] += a.e();
    out.total += a.e();
    min_height = std::min(min_height, a.t());
  }
  for (const auto& a : components)
    if (a.t() == min_height) out.degree += a.e();
  return out;
}

Integer adeg_top_stratum(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "adeg_top_stratum");
  require_strongly_stable(ideal, "adeg_top_stratum");
  const VarIndex l = ideal.nu();
  Integer sum = 0;
  for (const auto& g : ideal.generators())
    if (g.nu() == l) sum += g.exponent(l);
  return sum;
}

Integer degree_from_hilbert_series(const MonomialIdeal& ideal) {
  return hilbert_series_quotient(ideal).numerator_at_one();
}

bool has_linear_resolution(const MonomialIdeal& ideal) {
  const auto table = ek_betti(ideal);
  std::optional<int> shift;
  for (const auto& [key, value] : table.entries()) {
    const int s = key.second - key.first;
    if (shift && *shift != s) return false;
    shift = s;
  }
  return true;
}

bool is_cm_via_dual(const MonomialIdeal& ideal, std::optional<std::size_t> d) {
  return has_linear_resolution(star_dual(ideal, d));
}

std::vector<GridMonomial> canonical_generators(const MonomialIdeal& ideal,
                                               std::optional<std::size_t> d) {
  require_proper_nonzero(ideal, "canonical_generators");
  require_strongly_stable(ideal, "canonical_generators");
  if (!is_cohen_macaulay(ideal))
    throw NotCohenMacaulay("canonical_generators: S/I is not Cohen-Macaulay");
  const std::size_t cols = d.value_or(default_columns(ideal));
  const std::size_t c = height(ideal);
  const std::size_t n = ideal.ambient();

  std::vector<GridMonomial> out;
  for (const auto& m : ideal.generators()) {
    if (m.nu() != c) continue;
    const auto polarized = bpol_monomial(m, cols);
    std::vector<Cell> mu = polarized.cells();
    std::size_t partial = 0;
    for (VarIndex i = 1; i < m.nu(); ++i) {
      partial += m.exponent(i);
      mu.push_back({i, partial + 1});
    }
    std::sort(mu.begin(), mu.end());
    std::vector<Cell> omega;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= cols; ++j)
        if (!std::binary_search(mu.begin(), mu.end(), Cell{i, j})) omega.push_back({i, j});
    out.emplace_back(n, cols, std::move(omega));
  }
  return out;
}

bool euler_consistency(const MonomialIdeal& ideal, std::optional<std::size_t> d) {
  require_proper_nonzero(ideal, "euler_consistency");
  require_strongly_stable(ideal, "euler_consistency");
  (void)d;
  const auto components = decompose_strongly_stable(ideal);
  RationalSeries alternating;
  for (const auto& [i, s] : lc_series_via_components(components, ideal.ambient()))
    alternating += (i % 2 == 0) ? s : -s;
  return alternating == hilbert_series_quotient(ideal).inverted();
}

}  // namespace borel
