#pragma once

#include "borel/ideal.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace borel {

struct CorpusSpec {
  std::uint64_t seed = 42;
  std::size_t min_vars = 1, max_vars = 3;
  std::size_t min_cols = 1, max_cols = 3;
  std::size_t min_generators = 1, max_generators = 6;
  std::size_t trials = 200;

  /// Throws InputError on an empty or degenerate range.
  void validate() const;
};

struct Sample {
  /// Borel closure of `seeds`.
  MonomialIdeal ideal;
  /// The sampled monomials before closure; usually not strongly stable.
  MonomialIdeal seeds;
  /// Grid width used for b-pol; at least the largest generator degree.
  std::size_t cols;
};

/// `spec.trials` strongly stable ideals, reproducible from `spec.seed`.
/// Ideals outside the generator-count range are resampled.
std::vector<Sample> random_borel(const CorpusSpec& spec);

/// The worked example ideals with their grid widths.
std::vector<Sample> example_corpus();

struct PropertyTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  /// First failing ideal, in canonical text form.
  std::optional<std::string> counterexample;
  std::optional<std::string> detail;

  friend bool operator==(const PropertyTally&, const PropertyTally&) = default;
};

struct VerifyReport {
  std::optional<CorpusSpec> spec;
  std::size_t trials = 0;
  std::map<std::string, PropertyTally> properties;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
  /// Deterministic JSON, trailing newline.
  std::string to_json() const;
};

/// Names of every property run_suite checks, in report order.
std::vector<std::string> property_names();

VerifyReport run_suite(const CorpusSpec& spec);
VerifyReport run_suite(std::span<const Sample> corpus);

}  // namespace borel
