#include <doctest.h>

#include "kcell/suite.hpp"

using namespace kcell;

TEST_CASE("every suite passes at small scale") {
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    const SuiteReport r = run_suite(name, {5, 1, 0.05});
    CHECK_MESSAGE(r.ok(), name << ": " << (r.failures.empty() ? "" : r.failures.front().message));
    CHECK(r.cases > 0);
  }
}

TEST_CASE("reports are deterministic in the seed") {
  const SuiteOptions o{12, 1, 0.05};
  Json a = report_to_json(run_suite("stokes", o));
  Json b = report_to_json(run_suite("stokes", o));
  a.erase("seconds");
  b.erase("seconds");
  CHECK(a == b);
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_AS(run_suite("nope"), Error);
  CHECK(run_suites("all", {1, 1, 0.02}).size() == suite_names().size() - 1);
}
