#pragma once
// Verification scenarios shared by the command-line verifier and the
// acceptance tests.  Each scenario is deterministic; randomized ones take an
// explicit seed.

#include <cstdint>
#include <string>
#include <vector>

namespace qca {

struct Witness {
  std::string what, lhs, rhs;
};

struct ScenarioResult {
  std::string id;
  std::string certifies;  // one-line statement of what is checked
  std::string params;
  bool pass = true;
  long checks = 0;
  std::vector<Witness> failures;  // capped; both sides serialized
  std::vector<std::string> notes;
  double seconds = 0;

  void check(bool ok, const std::string& what, const std::string& lhs = "", const std::string& rhs = "");
};

struct ScenarioParams {
  int n = 0;          // 0: scenario default range
  int max_n = 0;      // 0: scenario default cap
  std::string surface;  // empty: scenario default set
  std::uint64_t seed = 20240601;
  int cases = 1000;
};

std::vector<std::string> scenario_names();
// throws std::invalid_argument for an unknown scenario or out-of-range n
ScenarioResult run_scenario(const std::string& name, const ScenarioParams& p);

}  // namespace qca
