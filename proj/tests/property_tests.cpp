// Seeded randomized suites through the scenario interface, plus determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qca/scenarios.hpp"

using namespace qca;

TEST_CASE("randomized algebraic properties") {
  for (std::uint64_t seed : {20240601ull, 1ull, 977ull}) {
    ScenarioParams p;
    p.seed = seed;
    auto r = run_scenario("properties", p);
    INFO("seed " << seed);
    for (auto& f : r.failures) INFO(f.what);
    CHECK(r.pass);
    CHECK(r.checks >= 1000 * 10);
  }
}

TEST_CASE("properties at other n") {
  for (int n : {2, 4}) {
    ScenarioParams p;
    p.n = n;
    p.cases = 200;
    CHECK(run_scenario("properties", p).pass);
  }
}

TEST_CASE("reports are deterministic") {
  ScenarioParams p;
  p.n = 3;
  auto a = run_scenario("split-conditions", p), b = run_scenario("split-conditions", p);
  CHECK(a.checks == b.checks);
  CHECK(a.notes == b.notes);
  p.cases = 50;
  auto c = run_scenario("properties", p), d = run_scenario("properties", p);
  CHECK(c.checks == d.checks);
}

TEST_CASE("bad parameters are rejected") {
  ScenarioParams p;
  CHECK_THROWS_AS(run_scenario("no-such-scenario", p), std::invalid_argument);
  p.n = 1;
  CHECK_THROWS_AS(run_scenario("cij", p), std::invalid_argument);
}
