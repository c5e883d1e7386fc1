#include "singkit/versal/plane_curve.hpp"

#include <stdexcept>

namespace singkit::versal {

using poly::Polynomial;
using poly::UniPoly;

namespace {

void require_plane(const Polynomial& F) {
  if (F.nvars() != 2) throw std::invalid_argument("plane curve needs exactly two variables");
}

Polynomial at_origin(const Polynomial& F, std::span<const Rational> pt) {
  require_plane(F);
  if (pt.size() != 2) throw std::invalid_argument("point needs two coordinates");
  Polynomial G = F.translate(pt);
  if (G.constant_term() != 0) throw std::invalid_argument("point is not on the curve");
  return G;
}

}  // namespace

TangentCone tangent_cone(const Polynomial& F, std::span<const Rational> pt) {
  const Polynomial G = at_origin(F, pt);
  TangentCone cone{Polynomial(F.ring()), 0, 0};
  if (G.is_zero()) return cone;
  cone.multiplicity = G.order();
  cone.form = G.homogeneous_part(cone.multiplicity);
  // Lines through 0: roots of form(u, 1), plus v = 0 when the degree drops.
  const UniPoly dehom = UniPoly::from_polynomial(cone.form.evaluate(1, 1), 0);
  cone.distinct_lines = squarefree_part(dehom).degree() + (dehom.degree() < cone.multiplicity ? 1 : 0);
  return cone;
}

std::string SingularityClass::to_string() const {
  switch (tag) {
    case SingularityTag::Smooth: return "Smooth";
    case SingularityTag::A: return "A(" + std::to_string(k) + ")";
    case SingularityTag::OrdinaryTriple: return "OrdinaryTriple";
    case SingularityTag::Other: break;
  }
  return "Other(m=" + std::to_string(multiplicity) + ")";
}

SingularityClass classify_plane_singularity(const Polynomial& F, std::span<const Rational> pt, int degree_guard) {
  const Polynomial G = at_origin(F, pt);
  if (G.is_zero()) throw std::invalid_argument("zero polynomial has no singularity type");
  SingularityClass c{SingularityTag::Other, 0, 0, 0, std::nullopt, tangent_cone(F, pt)};
  c.multiplicity = c.cone.multiplicity;
  c.distinct_lines = c.cone.distinct_lines;
  if (c.multiplicity == 1) {
    c.tag = SingularityTag::Smooth;
    return c;
  }
  if (c.multiplicity == 2) {
    const auto q = localstd::quotient_dimension(
        1, {localstd::ModuleElement({G.derivative(0)}), localstd::ModuleElement({G.derivative(1)})},
        localstd::LocalOrder::anti_graded(2), degree_guard);
    if (!q.dimension) throw std::runtime_error("double point is not isolated (infinite Milnor number)");
    c.milnor = q.dimension;
    c.tag = SingularityTag::A;
    c.k = static_cast<int>(*q.dimension);
    return c;
  }
  if (c.multiplicity == 3 && c.distinct_lines == 3) c.tag = SingularityTag::OrdinaryTriple;
  return c;
}

namespace {

std::vector<UniPoly> coefficients_second(const Polynomial& p) {
  std::vector<UniPoly> out;
  for (const auto& c : p.coefficients_in(1)) out.push_back(UniPoly::from_polynomial(c, 0));
  return out;
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) throw std::logic_error("inexact division in fraction-free elimination");
  return q;
}

// Fraction-free Gaussian elimination over Q[u].
UniPoly bareiss_det(std::vector<std::vector<UniPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UniPoly::constant(1);
  UniPoly prev = UniPoly::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t s = k + 1;
      while (s < n && m[s][k].is_zero()) ++s;
      if (s == n) return UniPoly();
      std::swap(m[k], m[s]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = UniPoly();
    }
    prev = m[k][k];
  }
  return negate ? m[n - 1][n - 1] * Rational(-1) : m[n - 1][n - 1];
}

}  // namespace

UniPoly resultant_second(const Polynomial& a, const Polynomial& b) {
  require_plane(a);
  if (!poly::same_ring(a.ring(), b.ring())) throw std::invalid_argument("resultant operands live over different rings");
  const auto ca = coefficients_second(a);
  const auto cb = coefficients_second(b);
  if (ca.empty() || cb.empty()) return UniPoly();
  const std::size_t da = ca.size() - 1, db = cb.size() - 1;
  const std::size_t n = da + db;
  if (n == 0) return UniPoly::constant(1);
  std::vector<std::vector<UniPoly>> m(n, std::vector<UniPoly>(n));
  for (std::size_t r = 0; r < db; ++r)
    for (std::size_t i = 0; i <= da; ++i) m[r][r + i] = ca[da - i];
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t i = 0; i <= db; ++i) m[db + r][r + i] = cb[db - i];
  return bareiss_det(std::move(m));
}

MultiplicityLocus triple_locus(const Polynomial& F, bool exclude_first_zero) {
  require_plane(F);
  std::vector<Polynomial> sys = {F, F.derivative(0), F.derivative(1)};
  sys.push_back(sys[1].derivative(0));
  sys.push_back(sys[1].derivative(1));
  sys.push_back(sys[2].derivative(1));
  std::vector<Polynomial> eqs;
  for (auto& s : sys)
    if (!s.is_zero()) eqs.push_back(s);

  MultiplicityLocus out;
  bool informed = false;
  UniPoly g;
  auto absorb = [&](const UniPoly& r) {
    if (r.is_zero()) return;
    g = informed ? gcd(g, r) : r.monic();
    informed = true;
  };
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    if (eqs[i].degree_in(1) == 0) absorb(UniPoly::from_polynomial(eqs[i], 0));
    for (std::size_t j = i + 1; j < eqs.size(); ++j)
      if (eqs[i].degree_in(1) > 0 && eqs[j].degree_in(1) > 0) absorb(resultant_second(eqs[i], eqs[j]));
  }
  if (!informed) return out;
  if (exclude_first_zero)
    while (g.degree() > 0 && g.coefficient(0) == 0) g = g.divmod(UniPoly::monomial(1, 1)).first;
  out.eliminant = g;
  out.status = g.degree() == 0 ? MultiplicityLocus::Status::Empty : MultiplicityLocus::Status::Possible;
  return out;
}

}  // namespace singkit::versal
