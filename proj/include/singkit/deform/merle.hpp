#pragma once

#include <optional>
#include <vector>

#include "singkit/deform/t1.hpp"

namespace singkit::deform {

/// Sufficient criterion only: a negative answer is never "inequivalent".
enum class MerleVerdict { Equivalent, Inconclusive };

struct MerleReport {
  MerleVerdict verdict = MerleVerdict::Inconclusive;
  poly::Valuation nu = poly::Valuation::infinity();
  Rational threshold;
  std::optional<Rational> alpha;
  poly::DegreesWeights weights;
};

const char* to_string(MerleVerdict v);

/// f + g is analytically equivalent to f when nu_{d,a}(g) > max(0, alpha).
/// Weights default to find_weights(f). Throws if f is not quasi-homogeneous
/// for them, if tau(f) is infinite, or if g has the wrong length.
MerleReport merle_equivalence(const MapGerm& f, const std::vector<poly::Polynomial>& g,
                              std::optional<poly::DegreesWeights> dw = std::nullopt,
                              int degree_guard = localstd::kDefaultDegreeGuard);

enum class QuadrupleVerdict { ModelEquivalent, Inconclusive };

struct QuadrupleReport {
  QuadrupleVerdict verdict = QuadrupleVerdict::Inconclusive;
  poly::Polynomial remainder;  // p - (xz + yz + z^3)
  MerleReport merle;
};

const char* to_string(QuadrupleVerdict v);

/// The model germ (xz + yz + z^3, xy) over the ring of p (which must name x, y, z).
MapGerm quadruple_model(const poly::Ring& ring);

/// Compares (p, xy) with the model. p must vanish at 0 and contain xz, yz, z^3
/// each with coefficient 1; otherwise std::invalid_argument.
QuadrupleReport normalize_quadruple(const poly::Polynomial& p);

}  // namespace singkit::deform
