#include "support.hpp"

#include <borel/errors.hpp>

#include <doctest.h>

using namespace borel;

TEST_CASE("random corpus is reproducible and strongly stable") {
  CorpusSpec spec;
  spec.trials = 50;
  const auto a = random_borel(spec);
  const auto b = random_borel(spec);
  REQUIRE(a.size() == 50);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].ideal == b[i].ideal);
    CHECK(a[i].seeds == b[i].seeds);
    CHECK(is_strongly_stable(a[i].ideal));
    CHECK(a[i].ideal.size() <= spec.max_generators);
    CHECK(a[i].ideal.max_degree() <= a[i].cols);
    CHECK(a[i].ideal == borel_closure(a[i].seeds.generators(), a[i].ideal.ambient()));
  }
  spec.seed = 43;
  const auto c = random_borel(spec);
  bool differs = false;
  for (std::size_t i = 0; i < c.size(); ++i) differs = differs || !(c[i].ideal == a[i].ideal);
  CHECK(differs);
}

TEST_CASE("one variable gives principal ideals") {
  CorpusSpec spec;
  spec.max_vars = 1;
  spec.trials = 20;
  for (const auto& s : random_borel(spec)) {
    CHECK(s.ideal.ambient() == 1);
    CHECK(s.ideal.size() == 1);
  }
}

TEST_CASE("invalid corpus specifications") {
  CorpusSpec spec;
  spec.min_vars = 0;
  CHECK_THROWS_AS(random_borel(spec), InputError);
  spec = CorpusSpec{};
  spec.min_generators = 7;
  spec.max_generators = 6;
  CHECK_THROWS_AS(random_borel(spec), InputError);
}

TEST_CASE("worked examples pass every property") {
  const auto corpus = example_corpus();
  const auto report = run_suite(corpus);
  CHECK(report.trials == corpus.size());
  for (const auto& [name, tally] : report.properties) {
    INFO(name, " ", tally.detail.value_or(""));
    CHECK(tally.failed == 0);
  }
}

TEST_CASE("the principal ideal (x1) passes every property") {
  const MonomialIdeal I(1, {Monomial{1}});
  const std::vector<Sample> corpus{{I, I, 1}};
  CHECK(run_suite(corpus).ok());
}

TEST_CASE("default suite passes, conserves trials and serializes deterministically") {
  CorpusSpec spec;
  const auto report = run_suite(spec);
  CHECK(report.ok());
  CHECK(report.properties.size() == property_names().size());
  for (const auto& [name, tally] : report.properties)
    CHECK(tally.passed + tally.failed + tally.skipped == spec.trials);
  CHECK(report.to_json() == run_suite(spec).to_json());
}

TEST_CASE("stress corpus passes") {
  const auto corpus = test::stress_corpus(97, 120);
  const auto report = run_suite(corpus);
  for (const auto& [name, tally] : report.properties) {
    INFO(name, " ", tally.counterexample.value_or(""), " ", tally.detail.value_or(""));
    CHECK(tally.failed == 0);
  }
}

TEST_CASE("failures are reported with a counterexample") {
  // A non-strongly-stable ideal violates the preconditions of most properties.
  const MonomialIdeal bad(2, {Monomial{0, 1}});
  const std::vector<Sample> corpus{{bad, bad, 1}};
  const auto report = run_suite(corpus);
  CHECK_FALSE(report.ok());
  const auto& tally = report.properties.at("decompose_vs_oracle");
  CHECK(tally.failed == 1);
  CHECK(tally.counterexample == std::optional<std::string>("x2 (n=2, d=1)"));
}
