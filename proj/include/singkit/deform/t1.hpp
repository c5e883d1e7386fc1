#pragma once

// First-order deformations of complete-intersection map germs.

#include <map>
#include <optional>
#include <vector>

#include "singkit/localstd/standard_basis.hpp"
#include "singkit/poly/weights.hpp"

namespace singkit::deform {

/// f = (f_1, ..., f_p) over n variables, each vanishing at the origin, p <= n.
class MapGerm {
 public:
  explicit MapGerm(std::vector<poly::Polynomial> f);

  const std::vector<poly::Polynomial>& f() const { return f_; }
  const poly::Polynomial& operator[](std::size_t i) const { return f_.at(i); }
  const poly::Ring& ring() const { return f_.front().ring(); }
  std::size_t p() const { return f_.size(); }
  std::size_t n() const { return ring()->size(); }

 private:
  std::vector<poly::Polynomial> f_;
};

struct IcisReport {
  bool is_complete = false;
  bool isolated = false;
  std::optional<std::size_t> tau;
  std::string detail;
};

using Grading = std::map<Rational, std::vector<localstd::StandardMonomial>>;

struct T1Result {
  std::optional<std::size_t> tau;
  localstd::QuotientBasis basis;
  std::optional<Grading> grading;
  std::optional<Rational> alpha;
  std::optional<poly::DegreesWeights> weights;  // grading weights, when graded
};

/// Weighted local order from find_weights, otherwise the anti-graded one.
localstd::LocalOrder default_order(const MapGerm& f);

/// {f_i e_k} followed by the Jacobian columns (df_1/dx_j, ..., df_p/dx_j).
std::vector<localstd::ModuleElement> t1_presentation(const MapGerm& f);

T1Result t1_compute(const MapGerm& f, int degree_guard = localstd::kDefaultDegreeGuard);
T1Result t1_compute(const MapGerm& f, const localstd::LocalOrder& order,
                    int degree_guard = localstd::kDefaultDegreeGuard);

/// Attaches nu(x^a e_i) = <a, alpha> - d_i per basis element and alpha = max nu.
/// Throws if some f_i is not quasi-homogeneous of type (d_i; a) or tau is infinite.
T1Result t1_grading(const MapGerm& f, const poly::DegreesWeights& dw, T1Result r);

/// max(0, alpha); 0 when alpha is absent.
Rational merle_threshold(const T1Result& graded);

IcisReport check_icis(const MapGerm& f, int degree_guard = localstd::kDefaultDegreeGuard);

}  // namespace singkit::deform
