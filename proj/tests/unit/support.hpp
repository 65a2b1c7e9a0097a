#pragma once

// Shared helpers and brute-force oracles for the unit tests.

#include <borel/decompose.hpp>
#include <borel/ideal.hpp>
#include <borel/polarize.hpp>
#include <borel/series.hpp>
#include <borel/text.hpp>
#include <borel/verify.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace borel::test {

inline MonomialIdeal ideal(const std::string& text, std::optional<std::size_t> n = std::nullopt) {
  return parse_ideal(text, n).ideal;
}

inline GridIdeal grid(const std::string& text, std::size_t rows, std::size_t cols) {
  return parse_grid_ideal(text, rows, cols).ideal;
}

inline std::string str(const MonomialIdeal& i, char letter = 'x') { return to_string(i, letter); }
inline std::string str(const GridIdeal& i, char letter = 'x') { return to_string(i, letter); }

inline std::string quadric_ideal() { return "x1^2, x1*x2, x1*x3, x2^2, x2*x3"; }
inline std::string mixed_ideal() { return "x1^2, x1*x2, x1*x3, x2^2, x2*x3^2"; }
inline std::string quartic_ideal() { return "x1^3, x1^2*x2, x1*x2^2, x1*x2*x3^2, x1^2*x3^2"; }
inline std::string cubic_ideal() { return "x1^2, x1*x2, x2^3, x1*x3, x2^2*x3"; }

/// H(S/I) = sum over subsets F of G(I) of (-1)^|F| λ^{deg lcm F} / (1-λ)^n.
inline RationalSeries hilbert_by_inclusion_exclusion(const MonomialIdeal& I) {
  const auto gens = I.generators();
  Laurent num;
  for (std::uint32_t mask = 0; mask < (1u << gens.size()); ++mask) {
    Monomial l = Monomial::one(I.ambient());
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (mask & (1u << k)) l = lcm(l, gens[k]);
    laurent::add_term(num, static_cast<int>(l.degree()), std::popcount(mask) % 2 ? -1 : 1);
  }
  return RationalSeries(std::move(num), static_cast<unsigned>(I.ambient()));
}

/// Every monomial of degree <= max_degree in n variables.
inline std::vector<Monomial> monomials_up_to(std::size_t n, std::size_t max_degree) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(n, 0);
  for (;;) {
    out.emplace_back(e);
    std::size_t i = 0;
    for (; i < n; ++i) {
      ++e[i];
      std::size_t sum = 0;
      for (auto x : e) sum += x;
      if (sum <= max_degree) break;
      e[i] = 0;
    }
    if (i == n) return out;
  }
}

/// Number of standard monomials (not in I) of each degree 0..max_degree.
inline Laurent standard_monomial_counts(const MonomialIdeal& I, std::size_t max_degree) {
  Laurent out;
  for (const auto& m : monomials_up_to(I.ambient(), max_degree))
    if (!contains(I, m)) laurent::add_term(out, static_cast<int>(m.degree()), 1);
  return out;
}

/// Alexander dual of a squarefree ideal by enumerating minimal vertex covers
/// of the generator supports.
inline MonomialIdeal dual_by_transversals(const MonomialIdeal& I) {
  const std::size_t n = I.ambient();
  std::vector<std::uint32_t> edges;
  for (const auto& g : I.generators()) {
    std::uint32_t s = 0;
    for (auto v : g.support()) s |= 1u << (v - 1);
    edges.push_back(s);
  }
  std::vector<Monomial> covers;
  for (std::uint32_t c = 0; c < (1u << n); ++c) {
    const bool hits = std::all_of(edges.begin(), edges.end(), [c](auto e) { return (e & c) != 0; });
    if (!hits) continue;
    std::vector<Exponent> x(n, 0);
    for (std::size_t v = 0; v < n; ++v)
      if (c & (1u << v)) x[v] = 1;
    covers.emplace_back(std::move(x));
  }
  if (covers.empty()) return MonomialIdeal::zero(n);
  return MonomialIdeal(n, std::move(covers));
}

/// Random monomial ideal with no structure, for the converse directions.
inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, std::size_t n,
                                           std::size_t max_degree, std::size_t count) {
  std::vector<Monomial> gens;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Exponent> e(n, 0);
    const std::size_t degree = 1 + rng() % max_degree;
    for (std::size_t j = 0; j < degree; ++j) ++e[rng() % n];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(gens));
}

/// A wider corpus than the acceptance run.
inline std::vector<Sample> stress_corpus(std::uint64_t seed = 7, std::size_t trials = 150) {
  CorpusSpec spec;
  spec.seed = seed;
  spec.max_vars = 4;
  spec.max_cols = 4;
  spec.min_generators = 3;
  spec.max_generators = 10;
  spec.trials = trials;
  return random_borel(spec);
}

}  // namespace borel::test
