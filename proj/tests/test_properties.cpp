#include <doctest.h>

#include "properties.hpp"

using namespace singkit::testing;

TEST_CASE("polynomial arithmetic on random inputs") {
  const Tally t = ring_properties(20261019, 1000);
  INFO(t.first_failure);
  CHECK(t.cases == 1000);
  CHECK(t.failures == 0);
}

TEST_CASE("local standard bases agree with the jet oracle on random ideals") {
  const IdealTally t = ideal_agreement(20261019, 100);
  INFO(t.first_failure);
  CHECK(t.dimension_cases == 100);
  CHECK(t.failures == 0);
  // Both outcomes occur, so the agreement is not vacuous.
  CHECK(t.members > 0);
  CHECK(t.members < t.membership_cases);
}

TEST_CASE("other seeds") {
  for (const std::uint64_t seed : {1u, 2u, 3u}) {
    CAPTURE(seed);
    const Tally r = ring_properties(seed, 200);
    INFO(r.first_failure);
    CHECK(r.failures == 0);
    const IdealTally i = ideal_agreement(seed, 20);
    INFO(i.first_failure);
    CHECK(i.failures == 0);
  }
}
