#include "singkit/deform/t1.hpp"

#include <algorithm>
#include <stdexcept>

namespace singkit::deform {

using localstd::LocalOrder;
using localstd::ModuleElement;

MapGerm::MapGerm(std::vector<poly::Polynomial> f) : f_(std::move(f)) {
  if (f_.empty()) throw std::invalid_argument("map germ needs at least one component");
  for (const auto& fi : f_) {
    if (!poly::same_ring(fi.ring(), f_.front().ring()))
      throw std::invalid_argument("germ components live over different variable sets");
    if (fi.constant_term() != 0) throw std::invalid_argument("germ component does not vanish at the origin: " + fi.to_string());
  }
  if (f_.size() > ring()->size()) throw std::invalid_argument("germ has more equations than variables");
}

LocalOrder default_order(const MapGerm& f) {
  if (std::none_of(f.f().begin(), f.f().end(), [](const auto& fi) { return fi.is_zero(); }))
    if (const auto dw = poly::find_weights(f.f())) return LocalOrder::weighted(*dw);
  return LocalOrder::anti_graded(f.n(), f.p());
}

std::vector<ModuleElement> t1_presentation(const MapGerm& f) {
  std::vector<ModuleElement> gens;
  for (const auto& fi : f.f())
    for (std::size_t k = 0; k < f.p(); ++k) gens.push_back(ModuleElement::embed(fi, f.p(), k));
  for (std::size_t j = 0; j < f.n(); ++j) {
    std::vector<poly::Polynomial> col;
    for (const auto& fi : f.f()) col.push_back(fi.derivative(j));
    gens.emplace_back(std::move(col));
  }
  return gens;
}

T1Result t1_compute(const MapGerm& f, int degree_guard) { return t1_compute(f, default_order(f), degree_guard); }

T1Result t1_compute(const MapGerm& f, const LocalOrder& order, int degree_guard) {
  T1Result r;
  r.basis = localstd::quotient_dimension(f.p(), t1_presentation(f), order, degree_guard);
  r.tau = r.basis.dimension;
  return r;
}

T1Result t1_grading(const MapGerm& f, const poly::DegreesWeights& dw, T1Result r) {
  if (dw.degrees.size() != f.p() || dw.weights.size() != f.n())
    throw std::invalid_argument("degrees and weights do not match the germ");
  for (std::size_t i = 0; i < f.p(); ++i)
    if (!poly::is_quasi_homogeneous(f[i], dw.degrees[i], dw.weights))
      throw std::invalid_argument("component " + std::to_string(i + 1) + " is not quasi-homogeneous of type " +
                                  dw.to_string());
  if (!r.tau) throw std::invalid_argument("tau is infinite; no grading");
  Grading g;
  for (const auto& m : r.basis.basis) g[dw.weights.degree(m.monomial) - dw.degrees[m.component]].push_back(m);
  r.alpha.reset();
  if (!g.empty()) r.alpha = g.rbegin()->first;
  r.grading = std::move(g);
  r.weights = dw;
  return r;
}

Rational merle_threshold(const T1Result& graded) {
  if (graded.alpha && *graded.alpha > 0) return *graded.alpha;
  return 0;
}

IcisReport check_icis(const MapGerm& f, int degree_guard) {
  IcisReport rep;
  rep.is_complete = true;
  for (std::size_t i = 0; i < f.p() && rep.is_complete; ++i) {
    if (f[i].is_zero()) {
      rep.is_complete = false;
      rep.detail = "component " + std::to_string(i + 1) + " is zero";
      break;
    }
    std::vector<poly::Polynomial> others;
    for (std::size_t k = 0; k < f.p(); ++k)
      if (k != i) others.push_back(f[k]);
    if (localstd::ideal_membership(f[i], others, LocalOrder::anti_graded(f.n()))) {
      rep.is_complete = false;
      rep.detail = "component " + std::to_string(i + 1) + " lies in the ideal of the others";
    }
  }
  rep.tau = t1_compute(f, degree_guard).tau;
  rep.isolated = rep.tau.has_value();
  if (rep.detail.empty()) rep.detail = rep.isolated ? "finite tau" : "infinite tau";
  return rep;
}

}  // namespace singkit::deform
