#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "singkit/deform/t1.hpp"

namespace singkit::versal {

/// f_i + sum of t_b * x^b over the T^1 basis elements b living in component i.
struct VersalFamily {
  deform::MapGerm germ;
  std::vector<localstd::StandardMonomial> directions;
  std::vector<std::string> parameters;
  poly::Ring ring;  // germ variables followed by parameters
  std::vector<poly::Polynomial> equations;
  /// Parameters are a1..a4, b1..b3 (quadruple-point germ) rather than t1..t_tau.
  bool quadruple_naming = false;

  poly::Polynomial parameter(std::string_view name) const;
  /// Names of the germ variables.
  std::vector<std::string> variables() const;
  /// Ring of the parameters alone.
  poly::Ring parameter_ring() const;
  /// Sets the given parameters to constants; the ring is unchanged.
  VersalFamily restrict(const std::map<std::string, Rational>& values) const;
};

/// Throws std::invalid_argument when r.tau is infinite or names collide.
VersalFamily versal_family(const deform::MapGerm& f, const deform::T1Result& r);

/// Paper: x = +b1/y, giving F = z^3 y + z y^2 + b1 z + ... with stratum
/// a4^2 = 4 b1. Consistent: x = -b1/y, the solution of G = xy + b1 = 0.
enum class SignMode { Paper, Consistent };

const char* to_string(SignMode mode);
SignMode parse_sign_mode(std::string_view text);

struct PlaneModel {
  poly::Polynomial equation;  // over (y, z, a1, a2, a3, a4, b1)
  SignMode mode;
  std::string substitution;   // "x = b1/y" or "x = -b1/y"
};

/// Restricts b2 = b3 = 0, solves G = 0 for x on y != 0, substitutes into F
/// and clears the denominator y. Requires the quadruple-point family shape.
PlaneModel eliminate_to_plane(const VersalFamily& fam, SignMode mode);

/// The plane model with every parameter set, over the ring (y, z).
poly::Polynomial plane_fiber(const PlaneModel& model, const std::map<std::string, Rational>& values);

}  // namespace singkit::versal
