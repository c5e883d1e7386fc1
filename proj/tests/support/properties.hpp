#pragma once

// Randomized algebra checks shared by the unit tests and the acceptance run.

#include <cstddef>
#include <cstdint>
#include <string>

namespace singkit::testing {

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
  void record(bool ok, const std::string& what);
};

/// Ring axioms, Leibniz rule, order of a product and parser round trip on
/// random polynomials in x, y, z. One case per random triple.
Tally ring_properties(std::uint64_t seed, int count);

struct IdealTally : Tally {
  std::size_t dimension_cases = 0;
  std::size_t membership_cases = 0;
  std::size_t members = 0;
};

/// Random ideals in at most 3 variables with generators of degree <= 4 and
/// finite colength: quotient dimension and membership against the jet oracle.
IdealTally ideal_agreement(std::uint64_t seed, int count);

}  // namespace singkit::testing
