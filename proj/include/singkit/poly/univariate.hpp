#pragma once

#include <string>
#include <utility>
#include <vector>

#include "singkit/poly/polynomial.hpp"

namespace singkit::poly {

/// Dense univariate polynomial over Q; coefficient i multiplies t^i.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t degree);

  /// Requires p to involve no variable other than var.
  static UniPoly from_polynomial(const Polynomial& p, std::size_t var);

  /// -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  Rational evaluate(const Rational& t) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);

/// p / gcd(p, p'), monic.
UniPoly squarefree_part(const UniPoly& p);

}  // namespace singkit::poly
