#pragma once

// Independent reference computations by plain linear algebra on truncated
// jets. Shares only the polynomial container with the library under test.

#include <cstddef>
#include <optional>
#include <vector>

#include "singkit/poly/polynomial.hpp"

namespace singkit::oracle {

/// Generators of a submodule of O^p, one polynomial per component.
using Vector = std::vector<poly::Polynomial>;

/// dim O^p / (M + m^{B+1} O^p).
std::size_t jet_codimension(std::size_t rank, const std::vector<Vector>& gens, int B);

struct JetDimension {
  std::optional<std::size_t> dimension;  // empty if no stabilization up to max_bound
  int bound = 0;                         // first B with q(B) = q(B+1)
  std::vector<std::size_t> sequence;     // q(0), q(1), ...
};

/// Stabilization q(B) = q(B+1) implies m^{B+1} O^p lies in M (Nakayama), so
/// q(B) is the exact colength.
JetDimension jet_quotient_dimension(std::size_t rank, const std::vector<Vector>& gens, int max_bound);

/// Membership of e in M, valid once m^{B+1} O^p lies in M.
bool jet_member(const Vector& e, const std::vector<Vector>& gens, int B);

/// True when F(y, z) (ring of two variables) has a point with y != 0 where F
/// and every partial of order <= 2 vanish. Dense resultants in z over Q[y].
bool has_triple_point_off_axis(const poly::Polynomial& F);

}  // namespace singkit::oracle
