#pragma once

// Divisor classes on the Hirzebruch surfaces F0 = P1 x P1 and F1.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace singkit::lattice {

/// F0: sigma^2 = 0. F1: sigma^2 = -1 (sigma is the negative section). Both:
/// sigma.F = 1, F^2 = 0.
enum class SurfaceKind { F0, F1 };

const char* to_string(SurfaceKind k);

/// s*sigma + f*F.
struct SurfaceClass {
  SurfaceKind kind = SurfaceKind::F0;
  long s = 0;
  long f = 0;

  SurfaceClass operator+(const SurfaceClass& o) const;
  SurfaceClass operator-(const SurfaceClass& o) const;
  SurfaceClass operator*(long k) const;
  bool operator==(const SurfaceClass&) const = default;

  /// "2*sigma + 3*F", "0".
  std::string to_string() const;
};

SurfaceClass sigma(SurfaceKind k);
SurfaceClass fiber(SurfaceKind k);
/// K = -2 sigma - 2F on F0, -2 sigma - 3F on F1.
SurfaceClass canonical(SurfaceKind k);
/// The anticanonical elliptic curve E = -K.
SurfaceClass anticanonical(SurfaceKind k);

/// Throws std::invalid_argument on kind mismatch.
long intersect(const SurfaceClass& a, const SurfaceClass& b);

/// 1 + (c.c + c.K)/2; throws std::domain_error if the numerator is odd.
long arithmetic_genus(const SurfaceClass& c);

/// s >= 0 and f >= 0.
bool effective(const SurfaceClass& c);

}  // namespace singkit::lattice
