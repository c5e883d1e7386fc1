#pragma once

// Weighted degrees, quasi-homogeneity and the associated valuations.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "singkit/poly/polynomial.hpp"

namespace singkit::poly {

/// Positive rational weight per variable.
class WeightSystem {
 public:
  explicit WeightSystem(std::vector<Rational> weights);

  std::size_t size() const { return a_.size(); }
  const Rational& operator[](std::size_t i) const { return a_[i]; }
  const std::vector<Rational>& values() const { return a_; }

  Rational degree(const Monomial& m) const;

  bool operator==(const WeightSystem& other) const { return a_ == other.a_; }

 private:
  std::vector<Rational> a_;
};

/// One degree per component of a map germ, plus the shared weights.
struct DegreesWeights {
  std::vector<Rational> degrees;
  WeightSystem weights;

  DegreesWeights(std::vector<Rational> d, WeightSystem a);

  /// (lambda*d; lambda*a) for lambda > 0.
  DegreesWeights scaled(const Rational& lambda) const;

  /// "(3,4; 2,2,1)".
  std::string to_string() const;

  bool operator==(const DegreesWeights& other) const = default;
};

/// A rational number or +infinity (the valuation of zero).
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  Valuation(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit on purpose

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const Valuation& a, const Valuation& b);
  friend bool operator<(const Valuation& a, const Valuation& b);
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

  std::string to_string() const;

 private:
  Valuation() = default;
  std::optional<Rational> value_;
};

/// min over terms of <a, exponents>; +infinity for the zero polynomial.
Valuation weighted_valuation(const Polynomial& p, const WeightSystem& a);

/// Terms of p whose weighted degree equals weighted_valuation(p).
Polynomial lowest_weighted_form(const Polynomial& p, const WeightSystem& a);

/// Every term has weighted degree exactly d. The zero polynomial qualifies for any d.
bool is_quasi_homogeneous(const Polynomial& p, const Rational& d, const WeightSystem& a);

/// nu_{d,a}(g) = min_i (nu_a(g_i) - d_i).
Valuation module_valuation(std::span<const Polynomial> g, const DegreesWeights& dw);

/// Positive (d; a) making every f_i quasi-homogeneous of degree d_i, scaled
/// so the smallest weight is 1. Empty when no positive solution exists.
std::optional<DegreesWeights> find_weights(std::span<const Polynomial> f);

}  // namespace singkit::poly
