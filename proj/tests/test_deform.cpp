#include <doctest.h>

#include "jet_oracle.hpp"
#include "singkit/deform/merle.hpp"
#include "singkit/poly/parser.hpp"

using namespace singkit;
using namespace singkit::poly;
using namespace singkit::deform;

namespace {

Polynomial P(const std::string& text, const Ring& R) { return parse_polynomial(text, R); }

MapGerm germ(std::initializer_list<const char*> f, const Ring& R) {
  std::vector<Polynomial> v;
  for (const char* s : f) v.push_back(P(s, R));
  return MapGerm(std::move(v));
}

std::vector<std::string> names(const T1Result& r, const Ring& R) {
  std::vector<std::string> out;
  for (const auto& m : r.basis.basis) out.push_back(localstd::to_string(m, *R));
  return out;
}

const Ring& xyz() {
  static const Ring R = make_ring("x,y,z");
  return R;
}

}  // namespace

TEST_CASE("map germ invariants") {
  const Ring& R = xyz();
  CHECK_THROWS(germ({"x+1"}, R));
  CHECK_THROWS(germ({"x", "y", "z", "x*y"}, R));
  CHECK_NOTHROW(germ({"x*z+y*z+z^3", "x*y"}, R));
}

TEST_CASE("T1 presentation") {
  const Ring& R = xyz();
  const auto pres = t1_presentation(germ({"x*z+y*z+z^3", "x*y"}, R));
  REQUIRE(pres.size() == 7);
  CHECK(pres[0].to_string() == "(z^3 + x*z + y*z, 0)");
  CHECK(pres[3].to_string() == "(0, x*y)");
  CHECK(pres[4] == localstd::ModuleElement({P("z", R), P("y", R)}));
  CHECK(pres[5] == localstd::ModuleElement({P("z", R), P("x", R)}));
  CHECK(pres[6] == localstd::ModuleElement({P("x+y+3*z^2", R), Polynomial(R)}));

  const Ring XY = make_ring("x,y");
  const auto tj = t1_presentation(germ({"y^2-x^3"}, XY));
  REQUIRE(tj.size() == 3);
  CHECK(tj[1][0] == P("-3*x^2", XY));
  CHECK(tj[2][0] == P("2*y", XY));
  CHECK(*t1_compute(germ({"x", "y"}, XY)).tau == 0);
}

TEST_CASE("T1 of the quadruple point germ") {
  const Ring& R = xyz();
  const T1Result r = t1_compute(germ({"x*z+y*z+z^3", "x*y"}, R));
  CHECK(*r.tau == 7);
  CHECK(names(r, R) == std::vector<std::string>{"e1", "x*e1", "y*e1", "z*e1", "e2", "z*e2", "z^2*e2"});
}

TEST_CASE("T1 of A_k curves matches the jet oracle") {
  const Ring XY = make_ring("x,y");
  for (int k = 1; k <= 8; ++k) {
    const Polynomial F = P("y^2-x^" + std::to_string(k + 1), XY);
    const T1Result r = t1_compute(MapGerm({F}), 40);
    CAPTURE(k);
    REQUIRE(r.tau);
    CHECK(*r.tau == static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      CHECK(r.basis.basis[static_cast<std::size_t>(i)].monomial == Monomial({i, 0}));
    const std::vector<oracle::Vector> tj = {{F}, {F.derivative(0)}, {F.derivative(1)}};
    CHECK(*oracle::jet_quotient_dimension(1, tj, 20).dimension == *r.tau);
  }
  CHECK(*t1_compute(germ({"x*y"}, XY)).tau == 1);
}

TEST_CASE("ICIS check") {
  const Ring& R = xyz();
  const IcisReport q = check_icis(germ({"x*z+y*z+z^3", "x*y"}, R));
  CHECK(q.is_complete);
  CHECK(q.isolated);
  const Ring XY = make_ring("x,y");
  CHECK(check_icis(germ({"x*y"}, XY)).isolated);
  const IcisReport line = check_icis(germ({"x^2"}, XY));
  CHECK(line.is_complete);
  CHECK_FALSE(line.isolated);
  CHECK_FALSE(check_icis(germ({"x*y", "x^2*y"}, R)).is_complete);
}

TEST_CASE("grading of T1") {
  const Ring& R = xyz();
  const MapGerm f = germ({"x*z+y*z+z^3", "x*y"}, R);
  const T1Result g = t1_grading(f, DegreesWeights({3, 4}, WeightSystem({2, 2, 1})), t1_compute(f));
  REQUIRE(g.grading);
  std::map<Rational, std::vector<std::string>> seen;
  std::size_t total = 0;
  for (const auto& [nu, items] : *g.grading) {
    for (const auto& m : items) seen[nu].push_back(localstd::to_string(m, *R));
    total += items.size();
  }
  CHECK(total == 7);
  CHECK(seen[-4] == std::vector<std::string>{"e2"});
  CHECK(seen[-3] == std::vector<std::string>{"e1", "z*e2"});
  CHECK(seen[-2] == std::vector<std::string>{"z*e1", "z^2*e2"});
  CHECK(seen[-1] == std::vector<std::string>{"x*e1", "y*e1"});
  CHECK(*g.alpha == -1);
  CHECK(merle_threshold(g) == 0);

  const Ring YX = make_ring("y,x");
  const MapGerm cusp = germ({"y^2-x^3"}, YX);
  const T1Result c = t1_grading(cusp, DegreesWeights({6}, WeightSystem({3, 2})), t1_compute(cusp));
  REQUIRE(c.grading->size() == 2);
  CHECK(c.grading->begin()->first == -6);
  CHECK(c.grading->rbegin()->first == -4);
  CHECK(localstd::to_string(c.grading->rbegin()->second.front(), *YX) == "x*e1");

  const Ring XY = make_ring("x,y");
  const MapGerm smooth = germ({"x"}, XY);
  const T1Result s = t1_grading(smooth, DegreesWeights({1}, WeightSystem({1, 1})), t1_compute(smooth));
  CHECK(s.grading->empty());
  CHECK_FALSE(s.alpha);
  CHECK_THROWS(t1_grading(f, DegreesWeights({3, 4}, WeightSystem({1, 1, 1})), t1_compute(f)));
}

TEST_CASE("Merle criterion") {
  const Ring& R = xyz();
  const MapGerm f = germ({"x*z+y*z+z^3", "x*y"}, R);
  const MerleReport e = merle_equivalence(f, {P("2*x^2 - 3*y^2 + x^3", R), Polynomial(R)});
  CHECK(e.verdict == MerleVerdict::Equivalent);
  CHECK(e.nu == Valuation(1));
  const MerleReport i = merle_equivalence(f, {P("z", R), Polynomial(R)});
  CHECK(i.verdict == MerleVerdict::Inconclusive);
  CHECK(i.nu == Valuation(-2));
  CHECK(merle_equivalence(f, {Polynomial(R), Polynomial(R)}).verdict == MerleVerdict::Equivalent);
  CHECK_THROWS(merle_equivalence(f, {P("z", R)}));
  const Ring XY = make_ring("x,y");
  CHECK_THROWS(merle_equivalence(germ({"x^2"}, XY), {P("y^5", XY)}));
  CHECK_THROWS(merle_equivalence(germ({"x+x^2"}, XY), {P("y^5", XY)}));
}

TEST_CASE("Merle verdict is invariant under scaling of the weights") {
  const Ring& R = xyz();
  const MapGerm f = germ({"x*z+y*z+z^3", "x*y"}, R);
  const DegreesWeights dw({3, 4}, WeightSystem({2, 2, 1}));
  for (const char* g : {"x^2", "z", "z^2", "y^2*z", "x*y*z"}) {
    const std::vector<Polynomial> pert = {P(g, R), Polynomial(R)};
    const auto base = merle_equivalence(f, pert, dw).verdict;
    for (const Rational& lambda : {Rational(1, 2), Rational(3), Rational(7, 5)}) {
      CAPTURE(g);
      CHECK(merle_equivalence(f, pert, dw.scaled(lambda)).verdict == base);
    }
  }
}

TEST_CASE("normal form of the quadruple point") {
  const Ring& R = xyz();
  CHECK(normalize_quadruple(P("x*z+y*z+z^3+x^2", R)).verdict == QuadrupleVerdict::ModelEquivalent);
  CHECK(normalize_quadruple(P("x*z+y*z+z^3", R)).verdict == QuadrupleVerdict::ModelEquivalent);
  const QuadrupleReport z2 = normalize_quadruple(P("x*z+y*z+z^3+z^2", R));
  CHECK(z2.verdict == QuadrupleVerdict::Inconclusive);
  CHECK(z2.merle.nu == Valuation(-1));
  CHECK_THROWS(normalize_quadruple(P("x*z+y*z-z^3", R)));
  CHECK_THROWS(normalize_quadruple(P("x*z+y*z+z^3+1", R)));
}
