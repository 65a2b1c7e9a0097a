#include "borel/verify.hpp"

#include "borel/decompose.hpp"
#include "borel/duality.hpp"
#include "borel/errors.hpp"
#include "borel/homology.hpp"
#include "borel/polarize.hpp"
#include "borel/text.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <random>

namespace borel {

void CorpusSpec::validate() const {
  if (min_vars < 1 || min_vars > max_vars) throw InputError("invalid variable range");
  if (min_cols < 1 || min_cols > max_cols) throw InputError("invalid column range");
  if (min_generators < 1 || min_generators > max_generators)
    throw InputError("invalid generator range");
}

namespace {

// std::uniform_int_distribution is implementation-defined; this is not.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return lo + static_cast<std::size_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + static_cast<std::size_t>(x % range);
  }

 private:
  std::mt19937_64 engine_;
};

constexpr std::size_t kMaxAttempts = 100000;

}  // namespace

std::vector<Sample> random_borel(const CorpusSpec& spec) {
  spec.validate();
  Sampler rng(spec.seed);
  std::vector<Sample> out;
  out.reserve(spec.trials);
  for (std::size_t trial = 0; trial < spec.trials; ++trial) {
    for (std::size_t attempt = 0;; ++attempt) {
      if (attempt == kMaxAttempts)
        throw InputError("random_borel: generator range is unreachable for these n and d");
      const std::size_t n = rng.uniform(spec.min_vars, spec.max_vars);
      const std::size_t d = rng.uniform(spec.min_cols, spec.max_cols);
      const std::size_t count = rng.uniform(1, 4);
      std::vector<Monomial> seeds;
      for (std::size_t k = 0; k < count; ++k) {
        const std::size_t degree = rng.uniform(1, d);
        std::vector<VarIndex> word(degree);
        for (auto& v : word) v = rng.uniform(1, n);
        std::sort(word.begin(), word.end());
        std::vector<Exponent> e(n, 0);
        for (auto v : word) ++e[v - 1];
        seeds.emplace_back(std::move(e));
      }
      auto ideal = borel_closure(seeds, n);
      if (ideal.size() < spec.min_generators || ideal.size() > spec.max_generators) continue;
      out.push_back({std::move(ideal), MonomialIdeal(n, std::move(seeds)), d});
      break;
    }
  }
  return out;
}

std::vector<Sample> example_corpus() {
  const auto make = [](std::size_t n, std::vector<Monomial> gens, std::size_t d) {
    MonomialIdeal ideal(n, std::move(gens));
    return Sample{ideal, ideal, d};
  };
  return {
      make(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}}, 2),
      make(2, {{2, 0}, {1, 2}, {0, 3}}, 3),
      make(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 2}}, 3),
      make(3, {{3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {1, 1, 2}, {2, 0, 2}}, 4),
      make(3, {{2, 0, 0}, {1, 1, 0}, {0, 3, 0}, {1, 0, 1}, {0, 2, 1}}, 3),
      make(1, {{1}}, 1),
  };
}

namespace {

enum class Status { pass, fail, skip };

struct Outcome {
  Status status;
  std::string detail;
};

Outcome pass() { return {Status::pass, {}}; }
Outcome skip(std::string why) { return {Status::skip, std::move(why)}; }
Outcome check(bool ok, std::string detail) {
  return ok ? pass() : Outcome{Status::fail, std::move(detail)};
}

std::vector<GeneralComponent> general(std::span<const IrreducibleComponent> comps) {
  std::vector<GeneralComponent> out;
  for (const auto& a : comps) out.push_back(to_general(a));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GeneralComponent> general(std::span<const GridComponent> comps, std::size_t cols) {
  std::vector<GeneralComponent> out;
  for (const auto& b : comps) out.push_back(to_general(b, cols));
  std::sort(out.begin(), out.end());
  return out;
}

bool all_initial_segments(std::span<const GeneralComponent> comps,
                          std::vector<IrreducibleComponent>& out) {
  for (const auto& c : comps) {
    auto a = to_initial_segment(c);
    if (!a) return false;
    out.push_back(*a);
  }
  return true;
}

using Check = std::function<Outcome(const Sample&)>;

struct Property {
  const char* name;
  Check run;
};

Outcome decompose_vs_oracle(const Sample& s) {
  const auto e = decompose_strongly_stable(s.ideal);
  return check(general(e) == decompose_oracle(s.ideal), "E = " + to_string(std::span(e)));
}

Outcome decompose_intersection(const Sample& s) {
  const auto e = decompose_strongly_stable(s.ideal);
  bool antichain = true;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (i != j && e[i].contains(e[j])) antichain = false;
  return check(antichain && intersect_components(e, s.ideal.ambient()) == s.ideal,
               "E = " + to_string(std::span(e)));
}

Outcome bpol_decomposition_vs_oracle(const Sample& s) {
  const auto e = decompose_strongly_stable(s.ideal);
  const auto grid = bpol_ideal(s.ideal, s.cols);
  const auto predicted = bpol_decomposition(e);
  std::size_t total = 0;
  for (const auto& a : e) total += a.e();
  const bool disjoint =
      std::adjacent_find(predicted.begin(), predicted.end()) == predicted.end();
  return check(predicted.size() == total && disjoint &&
                   general(predicted, s.cols) == decompose_oracle(grid.flat()),
               "Psi(E) = " + to_string(std::span(predicted)));
}

Outcome condition_star(const Sample& s) {
  const auto holds = [](const MonomialIdeal& ideal, std::size_t cols) {
    try {
      grid_decomposition(bpol_ideal(ideal, cols));
      return true;
    } catch (const ConditionStarViolation&) {
      return false;
    }
  };
  const std::size_t seed_cols = std::max(s.cols, default_columns(s.seeds));
  return check(holds(s.ideal, s.cols) &&
                   holds(s.seeds, seed_cols) == is_strongly_stable(s.seeds),
               "seeds = " + to_string(s.seeds));
}

Outcome star_dual_grid_identity(const Sample& s) {
  const auto grid = bpol_ideal(s.ideal, s.cols);
  const bool involution = alexander_dual(alexander_dual(grid)) == grid;
  return check(involution && star_dual_identity_holds(s.ideal, s.cols),
               "I* = " + to_string(star_dual(s.ideal, s.cols), 'y'));
}

Outcome star_dual_involution(const Sample& s) {
  const std::size_t n = s.ideal.ambient();
  const auto e = decompose_strongly_stable(s.ideal);
  const auto dual = star_dual(s.ideal, s.cols);
  std::size_t total = 0;
  for (const auto& a : e) total += a.e();
  const bool stable = is_strongly_stable(dual) && dual.max_degree() <= n;
  const bool counts = dual.size() == total &&
                      bpol_decomposition(decompose_strongly_stable(dual)).size() == s.ideal.size();
  const bool back = ideal_equiv(star_dual(dual, n), s.ideal);
  return check(stable && counts && back, "I* = " + to_string(dual, 'y'));
}

Outcome sigma_dual_equivalence(const Sample& s) {
  const auto lhs = alexander_dual(sigma_ideal(s.ideal, s.cols));
  const auto rhs = sigma_ideal(star_dual(s.ideal, s.cols), s.ideal.ambient());
  return check(ideal_equiv(lhs, rhs), "dual of sigma = " + to_string(lhs) +
                                          ", sigma of dual = " + to_string(rhs));
}

Outcome sigma_decomposition_vs_oracle(const Sample& s) {
  const auto sigma = sigma_ideal(s.ideal, s.cols);
  const auto predicted = sigma_decomposition(decompose_strongly_stable(s.ideal));
  return check(is_squarefree_strongly_stable(sigma) && predicted == decompose_oracle(sigma),
               "I^sigma = " + to_string(sigma));
}

Outcome sigma_hilbert_shadow(const Sample& s) {
  const std::size_t n = s.ideal.ambient();
  const auto grid = hilbert_series_quotient(bpol_ideal(s.ideal, s.cols).flat());
  const auto sigma = hilbert_series_quotient(sigma_ideal(s.ideal, s.cols));
  const auto k = static_cast<int>((n - 1) * (s.cols - 1));
  return check(grid.times_one_minus_lambda(k) == sigma, "H(T/I^sigma) = " + to_string(sigma));
}

Outcome ek_vs_oracle(const Sample& s) {
  if (s.ideal.size() > kBettiOracleMaxGenerators) return skip("too many generators");
  return check(ek_betti(s.ideal) == betti_oracle(s.ideal), to_string(ek_betti(s.ideal)));
}

Outcome betti_preserved(const Sample& s) {
  if (s.ideal.size() > kBettiOracleMaxGenerators) return skip("too many generators");
  return check(ek_betti(s.ideal) == betti_oracle(bpol_ideal(s.ideal, s.cols)),
               to_string(ek_betti(s.ideal)));
}

Outcome lc_three_way(const Sample& s) {
  const std::size_t n = s.ideal.ambient();
  const auto e = decompose_strongly_stable(s.ideal);
  const auto a = lc_series_via_dual(s.ideal, s.cols);
  const auto b = lc_series_via_components(e, n);
  const auto c = lc_series_via_gamma(bpol_decomposition(e), n);
  return check(a == b && b == c, "dual:\n" + to_string(a) + "components:\n" + to_string(b) +
                                     "gamma:\n" + to_string(c));
}

Outcome euler(const Sample& s) { return check(euler_consistency(s.ideal, s.cols), {}); }

Outcome cm_iff_linear(const Sample& s) {
  return check(is_cm_via_dual(s.ideal, s.cols) == is_cohen_macaulay(s.ideal),
               "I* = " + to_string(star_dual(s.ideal, s.cols), 'y'));
}

Outcome degree_cross_check(const Sample& s) {
  const std::size_t n = s.ideal.ambient();
  const auto e = decompose_strongly_stable(s.ideal);
  const auto a = adeg(e, n);
  const auto top = a.strata.find(n - s.ideal.nu());
  const bool shortcut = top != a.strata.end() && top->second == adeg_top_stratum(s.ideal);
  return check(shortcut && a.degree == degree_from_hilbert_series(s.ideal),
               "deg = " + a.degree.str());
}

Outcome colon_decomposition(const Sample& s) {
  const std::size_t n = s.ideal.ambient();
  const auto e = decompose_strongly_stable(s.ideal);
  std::vector<IrreducibleComponent> expected;
  for (const auto& a : e) {
    if (a.t() < n) {
      expected.push_back(a);
    } else if (a.e() >= 2) {
      std::vector<Exponent> lowered(a.exponents().begin(), a.exponents().end());
      --lowered.back();
      expected.emplace_back(std::move(lowered));
    }
  }
  expected = irredundant(std::move(expected));
  const auto colon = colon_variable(s.ideal, n);
  if (colon.is_unit()) return check(expected.empty(), "I : x_n is the unit ideal");
  return check(decompose_strongly_stable(colon) == expected, "I : x_n = " + to_string(colon));
}

Outcome right_shift(const Sample& s) {
  const std::size_t n = s.ideal.ambient();
  if (!right_shift_check(decompose_strongly_stable(s.ideal), n))
    return check(false, "right-shift check rejects a strongly stable ideal");
  if (s.seeds.is_zero() || s.seeds.is_unit()) return pass();
  std::vector<IrreducibleComponent> comps;
  const auto oracle = decompose_oracle(s.seeds);
  if (!all_initial_segments(oracle, comps)) return pass();
  return check(right_shift_check(comps, n) == is_strongly_stable(s.seeds),
               "seeds = " + to_string(s.seeds));
}

Outcome polarization(const Sample& s) {
  return check(verify_polarization(s.ideal, bpol_ideal(s.ideal, s.cols)) &&
                   verify_polarization(s.ideal, stdpol_ideal(s.ideal)),
               {});
}

Outcome bpol_membership_agrees(const Sample& s) {
  const std::size_t n = s.ideal.ambient();
  // Every monomial of degree <= cols, enumerated as exponent vectors.
  std::vector<Exponent> e(n, 0);
  const auto degree = [&] {
    std::size_t sum = 0;
    for (auto x : e) sum += x;
    return sum;
  };
  for (;;) {
    const Monomial m(e);
    if (contains(s.ideal, m) != bpol_membership(s.ideal, m, s.cols))
      return check(false, "m = " + to_string(m));
    std::size_t i = 0;
    for (; i < n; ++i) {
      ++e[i];
      if (degree() <= s.cols) break;
      e[i] = 0;
    }
    if (i == n) return pass();
  }
}

Outcome canonical_module(const Sample& s) {
  if (!is_cohen_macaulay(s.ideal)) return skip("not Cohen-Macaulay");
  const auto grid = bpol_ideal(s.ideal, s.cols);
  const std::size_t big = grid.flat().ambient();
  std::vector<Monomial> gens(grid.flat().generators().begin(), grid.flat().generators().end());
  for (const auto& w : canonical_generators(s.ideal, s.cols)) gens.push_back(w.to_flat());
  const auto quotient = hilbert_series_quotient(grid.flat());
  const auto omega = quotient - hilbert_series_quotient(MonomialIdeal(big, std::move(gens)));
  const std::size_t dim = big - height(s.ideal);
  auto dual = quotient.inverted();
  if (dim % 2 == 1) dual = -dual;
  if (omega.is_zero() || dual.is_zero()) return check(false, "zero series");
  const int shift = omega.numerator().begin()->first - dual.numerator().begin()->first;
  return check(omega == dual.shifted(shift),
               "H(omega) = " + to_string(omega) + ", expected " + to_string(dual));
}

const std::vector<Property>& properties() {
  static const std::vector<Property> all = {
      {"betti_bpol_preserved", betti_preserved},
      {"bpol_decomposition_vs_oracle", bpol_decomposition_vs_oracle},
      {"bpol_membership", bpol_membership_agrees},
      {"canonical_module_series", canonical_module},
      {"cm_iff_dual_linear", cm_iff_linear},
      {"colon_decomposition", colon_decomposition},
      {"condition_star", condition_star},
      {"decompose_intersection", decompose_intersection},
      {"decompose_vs_oracle", decompose_vs_oracle},
      {"degree_cross_check", degree_cross_check},
      {"ek_vs_lcm_oracle", ek_vs_oracle},
      {"euler_consistency", euler},
      {"lc_three_way", lc_three_way},
      {"polarization_check", polarization},
      {"right_shift", right_shift},
      {"sigma_decomposition", sigma_decomposition_vs_oracle},
      {"sigma_dual_equivalence", sigma_dual_equivalence},
      {"sigma_hilbert_shadow", sigma_hilbert_shadow},
      {"star_dual_grid_identity", star_dual_grid_identity},
      {"star_dual_involution", star_dual_involution},
  };
  return all;
}

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const auto& p : properties()) out.emplace_back(p.name);
  return out;
}

std::size_t VerifyReport::failures() const {
  std::size_t total = 0;
  for (const auto& [name, tally] : properties) total += tally.failed;
  return total;
}

VerifyReport run_suite(std::span<const Sample> corpus) {
  VerifyReport report;
  report.trials = corpus.size();
  for (const auto& p : properties()) report.properties[p.name];
  for (const auto& sample : corpus) {
    for (const auto& p : properties()) {
      Outcome outcome;
      try {
        outcome = p.run(sample);
      } catch (const std::exception& e) {
        outcome = {Status::fail, std::string("exception: ") + e.what()};
      }
      auto& tally = report.properties[p.name];
      switch (outcome.status) {
        case Status::pass:
          ++tally.passed;
          break;
        case Status::skip:
          ++tally.skipped;
          break;
        case Status::fail:
          ++tally.failed;
          if (!tally.counterexample) {
            tally.counterexample = to_string(sample.ideal) + " (n=" +
                                   std::to_string(sample.ideal.ambient()) +
                                   ", d=" + std::to_string(sample.cols) + ")";
            tally.detail = outcome.detail;
          }
          break;
      }
    }
  }
  return report;
}

VerifyReport run_suite(const CorpusSpec& spec) {
  const auto corpus = random_borel(spec);
  auto report = run_suite(corpus);
  report.spec = spec;
  return report;
}

std::string VerifyReport::to_json() const {
  using nlohmann::json;
  json out = json::object();
  if (spec) {
    out["spec"] = {{"seed", spec->seed},
                   {"vars", {spec->min_vars, spec->max_vars}},
                   {"cols", {spec->min_cols, spec->max_cols}},
                   {"generators", {spec->min_generators, spec->max_generators}},
                   {"trials", spec->trials}};
  }
  out["trials"] = trials;
  out["failures"] = failures();
  json props = json::object();
  for (const auto& [name, tally] : properties) {
    json entry = {{"passed", tally.passed}, {"failed", tally.failed}, {"skipped", tally.skipped}};
    if (tally.counterexample) entry["counterexample"] = *tally.counterexample;
    if (tally.detail && !tally.detail->empty()) entry["detail"] = *tally.detail;
    props[name] = std::move(entry);
  }
  out["properties"] = std::move(props);
  return out.dump(2) + "\n";
}

}  // namespace borel
