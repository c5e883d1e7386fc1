#include "singkit/lattice/surface.hpp"

#include <stdexcept>

namespace singkit::lattice {

const char* to_string(SurfaceKind k) { return k == SurfaceKind::F0 ? "F0" : "F1"; }

namespace {

void same_kind(const SurfaceClass& a, const SurfaceClass& b) {
  if (a.kind != b.kind) throw std::invalid_argument("classes live on different surfaces");
}

std::string term(long c, const char* name, bool first) {
  std::string out;
  if (!first) out += c < 0 ? " - " : " + ";
  else if (c < 0) out += "-";
  const long a = c < 0 ? -c : c;
  if (a != 1) out += std::to_string(a) + "*";
  return out + name;
}

}  // namespace

SurfaceClass SurfaceClass::operator+(const SurfaceClass& o) const {
  same_kind(*this, o);
  return {kind, s + o.s, f + o.f};
}

SurfaceClass SurfaceClass::operator-(const SurfaceClass& o) const {
  same_kind(*this, o);
  return {kind, s - o.s, f - o.f};
}

SurfaceClass SurfaceClass::operator*(long k) const { return {kind, s * k, f * k}; }

std::string SurfaceClass::to_string() const {
  if (s == 0 && f == 0) return "0";
  std::string out;
  if (s != 0) out += term(s, "sigma", true);
  if (f != 0) out += term(f, "F", out.empty());
  return out;
}

SurfaceClass sigma(SurfaceKind k) { return {k, 1, 0}; }
SurfaceClass fiber(SurfaceKind k) { return {k, 0, 1}; }

SurfaceClass canonical(SurfaceKind k) { return {k, -2, k == SurfaceKind::F0 ? -2L : -3L}; }

SurfaceClass anticanonical(SurfaceKind k) { return canonical(k) * -1; }

long intersect(const SurfaceClass& a, const SurfaceClass& b) {
  same_kind(a, b);
  const long ss = a.kind == SurfaceKind::F0 ? 0 : -1;
  return a.s * b.s * ss + a.s * b.f + a.f * b.s;
}

long arithmetic_genus(const SurfaceClass& c) {
  const long num = intersect(c, c) + intersect(c, canonical(c.kind));
  if (num % 2 != 0) throw std::domain_error("odd adjunction numerator for " + c.to_string());
  return 1 + num / 2;
}

bool effective(const SurfaceClass& c) { return c.s >= 0 && c.f >= 0; }

}  // namespace singkit::lattice
