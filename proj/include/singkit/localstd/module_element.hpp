#pragma once

#include <string>
#include <vector>

#include "singkit/poly/polynomial.hpp"

namespace singkit::localstd {

/// Element of the free module of rank p; component i multiplies e_{i+1}.
class ModuleElement {
 public:
  explicit ModuleElement(std::vector<poly::Polynomial> components);

  /// p * e_{index+1} in a module of the given rank.
  static ModuleElement embed(const poly::Polynomial& p, std::size_t rank, std::size_t index);
  static ModuleElement zero(const poly::Ring& ring, std::size_t rank);

  std::size_t rank() const { return c_.size(); }
  const poly::Ring& ring() const { return c_.front().ring(); }
  const poly::Polynomial& operator[](std::size_t i) const { return c_.at(i); }
  const std::vector<poly::Polynomial>& components() const { return c_; }
  bool is_zero() const;

  ModuleElement operator+(const ModuleElement& o) const;
  ModuleElement operator-(const ModuleElement& o) const;
  ModuleElement operator*(const poly::Polynomial& s) const;
  bool operator==(const ModuleElement& o) const { return c_ == o.c_; }

  /// "(z, y)"
  std::string to_string() const;

 private:
  std::vector<poly::Polynomial> c_;
};

/// A monomial x^a e_{component+1}.
struct StandardMonomial {
  std::size_t component;
  poly::Monomial monomial;

  bool operator==(const StandardMonomial&) const = default;
  auto operator<=>(const StandardMonomial&) const = default;
};

/// "z^2*e2", "e1".
std::string to_string(const StandardMonomial& m, const poly::VariableSet& vars);

}  // namespace singkit::localstd
