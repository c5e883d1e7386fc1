#include "singkit/versal/family.hpp"

#include <algorithm>
#include <stdexcept>

#include "singkit/poly/parser.hpp"

namespace singkit::versal {

using poly::Polynomial;

poly::Polynomial VersalFamily::parameter(std::string_view name) const {
  if (std::find(parameters.begin(), parameters.end(), name) == parameters.end())
    throw std::invalid_argument("unknown parameter " + std::string(name));
  return Polynomial::variable(ring, name);
}

std::vector<std::string> VersalFamily::variables() const { return germ.ring()->names(); }

poly::Ring VersalFamily::parameter_ring() const { return poly::make_ring(parameters); }

VersalFamily VersalFamily::restrict(const std::map<std::string, Rational>& values) const {
  VersalFamily out = *this;
  for (const auto& [name, v] : values) {
    parameter(name);
    for (auto& e : out.equations) e = e.evaluate(name, v);
  }
  return out;
}

namespace {

bool is_quadruple_germ(const deform::MapGerm& f, const localstd::QuotientBasis& b) {
  const auto& names = f.ring()->names();
  if (f.p() != 2 || names.size() != 3) return false;
  if (std::find(names.begin(), names.end(), "x") == names.end() ||
      std::find(names.begin(), names.end(), "y") == names.end() ||
      std::find(names.begin(), names.end(), "z") == names.end())
    return false;
  const auto& R = f.ring();
  const bool f1 = f[0] == poly::parse_polynomial("x*z+y*z+z^3", R) || f[0] == poly::parse_polynomial("x*z+y*z-z^3", R);
  if (!f1 || f[1] != poly::parse_polynomial("x*y", R)) return false;
  const std::vector<std::pair<std::size_t, std::string>> expected = {
      {0, "1"}, {0, "x"}, {0, "y"}, {0, "z"}, {1, "1"}, {1, "z"}, {1, "z^2"}};
  if (b.basis.size() != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const Polynomial m = poly::parse_polynomial(expected[i].second, R);
    if (b.basis[i].component != expected[i].first || m.terms().begin()->first != b.basis[i].monomial) return false;
  }
  return true;
}

}  // namespace

VersalFamily versal_family(const deform::MapGerm& f, const deform::T1Result& r) {
  if (!r.tau) throw std::invalid_argument("tau is infinite; no versal family");
  VersalFamily fam{f, r.basis.basis, {}, nullptr, {}, is_quadruple_germ(f, r.basis)};
  if (fam.quadruple_naming) {
    fam.parameters = {"a1", "a2", "a3", "a4", "b1", "b2", "b3"};
  } else {
    for (std::size_t i = 0; i < fam.directions.size(); ++i) fam.parameters.push_back("t" + std::to_string(i + 1));
  }
  std::vector<std::string> names = f.ring()->names();
  for (const auto& p : fam.parameters) {
    if (f.ring()->index_of(p)) throw std::invalid_argument("parameter name " + p + " collides with a germ variable");
    names.push_back(p);
  }
  fam.ring = poly::make_ring(std::move(names));
  for (const auto& fi : f.f()) fam.equations.push_back(fi.in_ring(fam.ring));
  const std::size_t n = f.n();
  for (std::size_t b = 0; b < fam.directions.size(); ++b) {
    std::vector<int> exps(fam.ring->size(), 0);
    for (std::size_t j = 0; j < n; ++j) exps[j] = fam.directions[b].monomial[j];
    exps[n + b] = 1;
    fam.equations[fam.directions[b].component] += Polynomial(fam.ring, poly::Monomial(exps));
  }
  return fam;
}

const char* to_string(SignMode mode) { return mode == SignMode::Paper ? "paper" : "consistent"; }

SignMode parse_sign_mode(std::string_view text) {
  if (text == "paper") return SignMode::Paper;
  if (text == "consistent") return SignMode::Consistent;
  throw std::invalid_argument("sign mode must be paper or consistent");
}

PlaneModel eliminate_to_plane(const VersalFamily& fam, SignMode mode) {
  if (!fam.quadruple_naming) throw std::invalid_argument("family is not the quadruple-point family");
  const VersalFamily r = fam.restrict({{"b2", 0}, {"b3", 0}});
  const poly::Ring& R = r.ring;
  if (r.equations[1] != poly::parse_polynomial("x*y+b1", R))
    throw std::invalid_argument("second equation is not xy + b1 after restriction");
  const std::size_t x = *R->index_of("x");
  const auto c = r.equations[0].coefficients_in(x);
  if (c.size() > 2) throw std::invalid_argument("first equation is not linear in x");
  const Polynomial y = Polynomial::variable(R, "y");
  const Polynomial b1 = Polynomial::variable(R, "b1");
  const Rational sign = mode == SignMode::Paper ? 1 : -1;
  Polynomial out = c[0] * y;
  if (c.size() == 2) out += c[1] * b1 * sign;
  const poly::Ring plane = poly::make_ring({"y", "z", "a1", "a2", "a3", "a4", "b1"});
  return {out.in_ring(plane), mode, mode == SignMode::Paper ? "x = b1/y" : "x = -b1/y"};
}

poly::Polynomial plane_fiber(const PlaneModel& model, const std::map<std::string, Rational>& values) {
  Polynomial F = model.equation;
  for (const auto& name : model.equation.ring()->names()) {
    if (name == "y" || name == "z") continue;
    const auto it = values.find(name);
    if (it == values.end()) throw std::invalid_argument("missing value for parameter " + name);
    F = F.evaluate(name, it->second);
  }
  return F.in_ring(poly::make_ring("y,z"));
}

}  // namespace singkit::versal
