#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "rspec/classify/classify.hpp"

namespace rspec {

/// Outcome of a seeded randomized (or exhaustive) verification suite.
struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::size_t checks = 0;
  Completeness completeness = Completeness::Sampled;
  /// One entry per failed check, carrying the witness.
  std::vector<std::string> failures;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  bool passed() const { return failures.empty(); }
  nlohmann::ordered_json to_json() const;
};

/// Names accepted by run_suite.
const std::vector<std::string>& random_suite_names();

/// supp_ass, torsionpair, injective, bass, cor710, homsub, gseq.
/// `scale` multiplies the case counts (1 = defaults).
SuiteReport run_suite(const std::string& name, std::uint64_t seed, double scale = 1.0);

}  // namespace rspec
