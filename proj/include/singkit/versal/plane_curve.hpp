#pragma once

// Local invariants of plane curves at rational points.

#include <optional>
#include <span>
#include <string>

#include "singkit/localstd/standard_basis.hpp"
#include "singkit/poly/univariate.hpp"

namespace singkit::versal {

struct TangentCone {
  poly::Polynomial form;  // lowest homogeneous part of F(pt + v), in the same names
  int multiplicity = 0;
  int distinct_lines = 0;  // over the algebraic closure
};

/// F lives over a ring of exactly two variables.
TangentCone tangent_cone(const poly::Polynomial& F, std::span<const Rational> pt);

enum class SingularityTag { Smooth, A, OrdinaryTriple, Other };

struct SingularityClass {
  SingularityTag tag = SingularityTag::Other;
  int k = 0;  // A(k) only
  int multiplicity = 0;
  int distinct_lines = 0;
  std::optional<std::size_t> milnor;
  TangentCone cone;

  /// "Smooth", "A(2)", "OrdinaryTriple", "Other(m=4)".
  std::string to_string() const;
};

/// Throws std::invalid_argument if F(pt) != 0, std::runtime_error if a double
/// point has infinite Milnor number.
SingularityClass classify_plane_singularity(const poly::Polynomial& F, std::span<const Rational> pt,
                                            int degree_guard = localstd::kDefaultDegreeGuard);

/// Resultant of a and b with respect to the second variable, as a polynomial
/// in the first. Both live over the same two-variable ring.
poly::UniPoly resultant_second(const poly::Polynomial& a, const poly::Polynomial& b);

struct MultiplicityLocus {
  enum class Status { Empty, Possible, Undetermined };
  Status status = Status::Undetermined;
  /// gcd of the eliminants; its roots contain the first coordinate of every
  /// point of multiplicity >= 3.
  poly::UniPoly eliminant;
};

/// Points where F and all partials of order <= 2 vanish, found by eliminating
/// the second variable. With exclude_first_zero, points with first coordinate
/// 0 are ignored.
MultiplicityLocus triple_locus(const poly::Polynomial& F, bool exclude_first_zero);

}  // namespace singkit::versal
