#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singkit/versal/family.hpp"

namespace singkit::versal {

/// A locally closed set in parameter space: all vanishing constraints are 0
/// and all nonvanishing ones are nonzero.
struct StratumDescription {
  poly::Ring parameter_ring;
  std::vector<poly::Polynomial> vanishing;
  std::vector<poly::Polynomial> nonvanishing;
  /// Singular point (y, z) as polynomials in the parameters.
  std::optional<std::map<std::string, poly::Polynomial>> witness;
  SignMode mode = SignMode::Paper;

  bool contains(const std::map<std::string, Rational>& point) const;
  /// "a1=a2=a3=b2=b3=0, a4^2 = 4*b1"
  std::string format() const;
  /// Witness coordinates (y, z) at a parameter point.
  std::vector<Rational> witness_at(const std::map<std::string, Rational>& point) const;
};

/// Points of multiplicity >= 3 on the plane model: F and all partials of
/// order <= 2 vanish, with y != 0 (chart) and b1 != 0. b2 = b3 = 0 comes
/// from the restriction made by eliminate_to_plane.
StratumDescription triple_point_stratum(const VersalFamily& fam, SignMode mode = SignMode::Paper);

struct GammaChecks {
  bool smooth_curve_at_origin = false;     // Jacobian rank = #parameters - 1
  bool tangent_inside_gamma = false;       // tangent line has b-components 0
  bool meets_gamma_only_at_origin = false; // closure of the stratum cut with b = 0
  std::vector<std::string> tangent_directions;
};

/// Gamma is {b1 = b2 = b3 = 0}.
GammaChecks check_gamma(const StratumDescription& s);

}  // namespace singkit::versal
