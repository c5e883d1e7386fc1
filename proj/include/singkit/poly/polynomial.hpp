#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// Every polynomial carries a shared, immutable variable context (a Ring).
// Terms are kept in a map keyed by exponent vector, so no zero coefficient
// is ever stored and monomials are unique by construction.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "singkit/poly/rational.hpp"

namespace singkit::poly {

/// Ordered list of distinct variable names.
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Variable indices sorted by name; used to break printing ties.
  const std::vector<std::size_t>& by_name() const { return by_name_; }

  bool operator==(const VariableSet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> by_name_;
};

using Ring = std::shared_ptr<const VariableSet>;

Ring make_ring(std::vector<std::string> names);

/// Parses a comma separated list "x,y,z".
Ring make_ring(std::string_view comma_separated);

bool same_ring(const Ring& a, const Ring& b);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exponents);

  static Monomial variable(std::size_t nvars, std::size_t var, int power = 1);

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const { return exps_; }

  int total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial with_exponent(std::size_t var, int e) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<int> exps_;
};

std::string to_string(const Monomial& m, const VariableSet& vars);

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(Ring ring);
  Polynomial(Ring ring, const Rational& constant);
  Polynomial(Ring ring, Monomial m, const Rational& coefficient = 1);

  static Polynomial variable(Ring ring, std::string_view name);
  static Polynomial variable(Ring ring, std::size_t index);

  const Ring& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Lowest total degree of a term; -1 for zero.
  int order() const;
  int degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;

  Polynomial homogeneous_part(int degree) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial mul_monomial(const Monomial& m, const Rational& c = 1) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& other) const;

  Polynomial derivative(std::size_t var) const;
  Polynomial derivative(std::string_view var) const;

  /// Replaces a variable by a polynomial over the same ring.
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  Polynomial substitute(std::string_view var, const Polynomial& value) const;
  Polynomial evaluate(std::size_t var, const Rational& value) const;
  Polynomial evaluate(std::string_view var, const Rational& value) const;

  /// p(x + shift): every variable translated by the matching shift entry.
  Polynomial translate(std::span<const Rational> shift) const;

  /// Coefficients c_k with p = sum_k c_k * var^k; c_k do not involve var.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  /// Re-expresses the polynomial over another ring, matching variables by
  /// name. Throws if a variable that actually occurs is missing there.
  Polynomial in_ring(const Ring& target) const;

  /// Exact division by a monomial that divides every term.
  Polynomial divide_by_monomial(const Monomial& m) const;

  /// Greatest monomial dividing every term (1 for zero).
  Monomial monomial_content() const;

  /// Clears denominators, removes the integer content and fixes the sign so
  /// the first printed term is positive. Zero stays zero.
  Polynomial primitive() const;

  /// Terms in canonical print order: total degree descending, then
  /// lexicographically by variable name.
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& other) const;
  void add_term(const Monomial& m, const Rational& c);

  Ring ring_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace singkit::poly
