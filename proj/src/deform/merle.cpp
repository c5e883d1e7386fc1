#include "singkit/deform/merle.hpp"

#include <stdexcept>

#include "singkit/poly/parser.hpp"

namespace singkit::deform {

const char* to_string(MerleVerdict v) { return v == MerleVerdict::Equivalent ? "Equivalent" : "Inconclusive"; }

const char* to_string(QuadrupleVerdict v) {
  return v == QuadrupleVerdict::ModelEquivalent ? "ModelEquivalent" : "Inconclusive";
}

MerleReport merle_equivalence(const MapGerm& f, const std::vector<poly::Polynomial>& g,
                              std::optional<poly::DegreesWeights> dw, int degree_guard) {
  if (g.size() != f.p()) throw std::invalid_argument("perturbation length differs from the germ");
  if (!dw) dw = poly::find_weights(f.f());
  if (!dw) throw std::invalid_argument("germ is not quasi-homogeneous for any positive weights");
  const T1Result r = t1_grading(f, *dw, t1_compute(f, localstd::LocalOrder::weighted(*dw), degree_guard));
  MerleReport rep{MerleVerdict::Inconclusive, poly::module_valuation(g, *dw), merle_threshold(r), r.alpha, *dw};
  if (rep.nu > poly::Valuation(rep.threshold)) rep.verdict = MerleVerdict::Equivalent;
  return rep;
}

MapGerm quadruple_model(const poly::Ring& ring) {
  if (ring->size() != 3) throw std::invalid_argument("quadruple point lives in exactly the variables x, y, z");
  return MapGerm({poly::parse_polynomial("x*z+y*z+z^3", ring), poly::parse_polynomial("x*y", ring)});
}

QuadrupleReport normalize_quadruple(const poly::Polynomial& p) {
  const MapGerm model = quadruple_model(p.ring());
  if (p.constant_term() != 0) throw std::invalid_argument("polynomial does not vanish at the origin");
  for (const auto& [m, c] : model[0].terms())
    if (p.coefficient(m) != c)
      throw std::invalid_argument("shape check failed: expected xz + yz + z^3 with unit coefficients, got " +
                                  p.to_string());
  poly::Polynomial rest = p - model[0];
  std::vector<Rational> a;
  for (const auto& name : p.ring()->names()) a.emplace_back(name == "z" ? 1 : 2);
  const poly::DegreesWeights dw({3, 4}, poly::WeightSystem(std::move(a)));
  MerleReport m = merle_equivalence(model, {rest, poly::Polynomial(p.ring())}, dw);
  QuadrupleReport rep{m.verdict == MerleVerdict::Equivalent ? QuadrupleVerdict::ModelEquivalent
                                                            : QuadrupleVerdict::Inconclusive,
                      std::move(rest), std::move(m)};
  return rep;
}

}  // namespace singkit::deform
