#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "singkit/poly/polynomial.hpp"
#include "singkit/poly/weights.hpp"

namespace singkit::localstd {

/// Local monomial order on the free module of rank p over Q[x_1..x_n].
///
/// A term x^a e_i has integer degree <w, a> + shift_i. Lower degree is
/// larger, so 1 (and every e_i) dominates everything of positive degree.
/// Ties are broken first by component (higher index is larger), then
/// lexicographically with the last variable most significant (a larger
/// exponent is larger). The order is not a well-order; Mora's normal form
/// handles termination.
class LocalOrder {
 public:
  LocalOrder(std::vector<long> weights, std::vector<long> shifts);

  /// Unit weights, zero shifts.
  static LocalOrder anti_graded(std::size_t nvars, std::size_t rank = 1);

  /// Weights a and shifts -d_i, scaled by a common factor to integers.
  static LocalOrder weighted(const poly::DegreesWeights& dw);

  std::size_t nvars() const { return weights_.size(); }
  std::size_t rank() const { return shifts_.size(); }
  const std::vector<long>& weights() const { return weights_; }
  const std::vector<long>& shifts() const { return shifts_; }

  long degree(const poly::Monomial& m) const;
  long degree(const poly::Monomial& m, std::size_t component) const {
    return degree(m) + shifts_.at(component);
  }

  /// > 0 when (a, ca) is larger than (b, cb), 0 when equal.
  int compare(const poly::Monomial& a, std::size_t ca, const poly::Monomial& b, std::size_t cb) const;

  std::string describe() const;

 private:
  std::vector<long> weights_;
  std::vector<long> shifts_;
};

}  // namespace singkit::localstd
