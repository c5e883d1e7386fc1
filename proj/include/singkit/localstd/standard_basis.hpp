#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "singkit/localstd/local_order.hpp"
#include "singkit/localstd/module_element.hpp"

namespace singkit::localstd {

class StandardBasis {
 public:
  StandardBasis(std::vector<ModuleElement> generators, std::vector<StandardMonomial> leading,
                LocalOrder order, std::size_t rank);

  const std::vector<ModuleElement>& generators() const { return gens_; }
  /// Leading term of generators()[i].
  const std::vector<StandardMonomial>& leading_terms() const { return leading_; }
  /// Minimal generators of the leading-term module, sorted.
  const std::vector<StandardMonomial>& staircase() const { return staircase_; }
  const LocalOrder& order() const { return order_; }
  std::size_t rank() const { return rank_; }

  /// True when some staircase element divides m (same component).
  bool in_leading_module(const StandardMonomial& m) const;

 private:
  std::vector<ModuleElement> gens_;
  std::vector<StandardMonomial> leading_;
  std::vector<StandardMonomial> staircase_;
  LocalOrder order_;
  std::size_t rank_;
};

struct QuotientBasis {
  /// Empty when the complement of the staircase is infinite.
  std::optional<std::size_t> dimension;
  /// Sorted by component, then total degree, then exponent vector descending.
  std::vector<StandardMonomial> basis;

  bool finite() const { return dimension.has_value(); }
};

/// Total degree cap on standard monomials during enumeration.
inline constexpr int kDefaultDegreeGuard = 30;

/// Leading term of a nonzero element; throws on zero.
StandardMonomial leading_term(const ModuleElement& e, const LocalOrder& order);

ModuleElement mora_normal_form(const ModuleElement& e, const std::vector<ModuleElement>& basis,
                               const LocalOrder& order);

/// Zero generators are dropped.
StandardBasis standard_basis(const std::vector<ModuleElement>& gens, const LocalOrder& order);

/// Standard monomials outside the staircase. Throws std::runtime_error when a
/// standard monomial of total degree above degree_guard would be listed.
QuotientBasis quotient_basis(const StandardBasis& sb, int degree_guard = kDefaultDegreeGuard);

QuotientBasis quotient_dimension(std::size_t rank, const std::vector<ModuleElement>& gens,
                                 const LocalOrder& order, int degree_guard = kDefaultDegreeGuard);

bool ideal_membership(const poly::Polynomial& p, const std::vector<poly::Polynomial>& gens,
                      const LocalOrder& order);

}  // namespace singkit::localstd
