#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace ultrameasure {

/// Property families run by `verify`.
enum class Suite { all, lemma2, cocycle, prop5, lemma16, note19, ideals, isometry };

std::optional<Suite> parse_suite(std::string_view name);
std::string suite_name(Suite s);

enum class PropertyStatus { pass, fail, skipped };

struct PropertyResult {
  std::string name;
  PropertyStatus status = PropertyStatus::pass;
  std::size_t checks = 0;
  /// First failing instance (lowest trial index), or a pinned witness.
  nlohmann::json witness;
};

struct RunReport {
  std::string command;
  Suite suite = Suite::all;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::uint64_t q = 5;
  std::vector<std::string> instances;     // sorted group names exercised
  std::vector<PropertyResult> properties;  // sorted by name

  bool passed() const;
  std::vector<std::string> failures() const;
  /// Deterministic for fixed (suite, seed, trials, q); carries no timing.
  nlohmann::json to_json() const;
};

/// Runs the property families over seeded random instances. With trials == 0
/// nothing runs and the report has no properties.
RunReport run_verify(Suite suite, std::uint64_t seed, std::size_t trials, std::uint64_t q = 5);

}  // namespace ultrameasure
