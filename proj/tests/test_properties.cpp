#include <doctest.h>

#include "structural.hpp"

TEST_CASE("structural invariants over 1000 random instances") {
  const auto outcomes = woideal::testing::run_structural_suite(1000, 20260417);
  REQUIRE(outcomes.size() >= 8);
  for (const auto& p : outcomes) {
    INFO(p.name << ": " << p.checked << " checks");
    for (const auto& f : p.failures) FAIL_CHECK(p.name << " failed on " << f);
    CHECK(p.passed());
  }
}
