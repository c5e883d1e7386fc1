#include <doctest.h>

#include "jet_oracle.hpp"
#include "singkit/localstd/standard_basis.hpp"
#include "singkit/poly/parser.hpp"

using namespace singkit;
using namespace singkit::poly;
using namespace singkit::localstd;

namespace {

Polynomial P(const char* text, const Ring& R) { return parse_polynomial(text, R); }

std::vector<ModuleElement> ideal(std::initializer_list<const char*> gens, const Ring& R) {
  std::vector<ModuleElement> out;
  for (const char* g : gens) out.push_back(ModuleElement({P(g, R)}));
  return out;
}

std::vector<std::string> names(const QuotientBasis& q, const Ring& R) {
  std::vector<std::string> out;
  for (const auto& m : q.basis) out.push_back(to_string(m, *R));
  return out;
}

std::vector<ModuleElement> quadruple_presentation(const Ring& R) {
  const Polynomial f1 = P("x*z+y*z+z^3", R), f2 = P("x*y", R);
  std::vector<ModuleElement> g;
  for (const auto& f : {f1, f2})
    for (std::size_t k = 0; k < 2; ++k) g.push_back(ModuleElement::embed(f, 2, k));
  for (std::size_t j = 0; j < 3; ++j) g.push_back(ModuleElement({f1.derivative(j), f2.derivative(j)}));
  return g;
}

}  // namespace

TEST_CASE("local order: 1 is the largest monomial") {
  const LocalOrder o = LocalOrder::anti_graded(2);
  const Monomial one(2), x = Monomial::variable(2, 0), y = Monomial::variable(2, 1);
  CHECK(o.compare(one, 0, x, 0) > 0);
  CHECK(o.compare(x, 0, x * x, 0) > 0);
  CHECK(o.compare(y, 0, x, 0) > 0);  // last variable most significant among equal degrees
  CHECK(o.compare(x, 0, x, 0) == 0);
}

TEST_CASE("weighted local order uses component shifts") {
  const LocalOrder o = LocalOrder::weighted(DegreesWeights({3, 4}, WeightSystem({2, 2, 1})));
  CHECK(o.weights() == std::vector<long>{2, 2, 1});
  CHECK(o.shifts() == std::vector<long>{-3, -4});
  const Monomial one(3), z = Monomial::variable(3, 2);
  CHECK(o.compare(one, 1, one, 0) > 0);  // e2 has degree -4 < -3
  CHECK(o.compare(z, 1, one, 0) > 0);  // both of degree -3: higher component wins
  const LocalOrder half = LocalOrder::weighted(DegreesWeights({3}, WeightSystem({1, Rational(3, 2)})));
  CHECK(half.weights() == std::vector<long>{2, 3});
  CHECK(half.shifts() == std::vector<long>{-6});
}

TEST_CASE("Mora normal form") {
  const Ring R = make_ring("x,y,z");
  const LocalOrder o3 = LocalOrder::anti_graded(3);
  const ModuleElement f1({P("x*z+y*z+z^3", R)});
  CHECK(mora_normal_form(f1, {f1}, o3).is_zero());

  const Ring X = make_ring("x");
  CHECK(mora_normal_form(ModuleElement({P("x", X)}), {ModuleElement({P("x-x^2", X)})}, LocalOrder::anti_graded(1))
            .is_zero());

  const Ring XY = make_ring("x,y");
  const ModuleElement y({P("y", XY)});
  CHECK(mora_normal_form(y, {ModuleElement({P("x", XY)})}, LocalOrder::anti_graded(2)) == y);

  CHECK_THROWS(mora_normal_form(ModuleElement({P("x", XY), P("y", XY)}), {ModuleElement({P("x", XY)})},
                                LocalOrder::anti_graded(2, 2)));
}

TEST_CASE("standard bases and staircases") {
  const Ring XY = make_ring("x,y");
  const LocalOrder o = LocalOrder::anti_graded(2);
  {
    const StandardBasis sb = standard_basis(ideal({"x", "y"}, XY), o);
    REQUIRE(sb.staircase().size() == 2);
    const auto q = quotient_basis(sb);
    CHECK(*q.dimension == 1);
    CHECK(names(q, XY) == std::vector<std::string>{"e1"});
  }
  {
    const StandardBasis sb = standard_basis(ideal({"y^2-x^3", "-3*x^2", "2*y"}, XY), o);
    CHECK(sb.in_leading_module({0, Monomial({2, 0})}));
    CHECK(sb.in_leading_module({0, Monomial({0, 1})}));
    CHECK(sb.in_leading_module({0, Monomial({3, 0})}));
    CHECK(names(quotient_basis(sb), XY) == std::vector<std::string>{"e1", "x*e1"});
  }
}

TEST_CASE("quotient dimension") {
  const Ring R = make_ring("x,y,z");
  const auto m = quotient_dimension(1, ideal({"x", "y", "z"}, R), LocalOrder::anti_graded(3));
  CHECK(*m.dimension == 1);

  const Ring XY = make_ring("x,y");
  const auto a3 = quotient_dimension(1, ideal({"y^2-x^4", "y", "x^3"}, XY), LocalOrder::anti_graded(2));
  CHECK(names(a3, XY) == std::vector<std::string>{"e1", "x*e1", "x^2*e1"});

  const auto q = quotient_dimension(2, quadruple_presentation(R),
                                    LocalOrder::weighted(DegreesWeights({3, 4}, WeightSystem({2, 2, 1}))));
  CHECK(*q.dimension == 7);
  CHECK(names(q, R) == std::vector<std::string>{"e1", "x*e1", "y*e1", "z*e1", "e2", "z*e2", "z^2*e2"});
  // Another order gives another monomial basis of the same size.
  CHECK(*quotient_dimension(2, quadruple_presentation(R), LocalOrder::anti_graded(3, 2)).dimension == 7);
}

TEST_CASE("infinite quotients are reported, not enumerated") {
  const Ring XY = make_ring("x,y");
  CHECK_FALSE(quotient_dimension(1, ideal({"x^2"}, XY), LocalOrder::anti_graded(2)).finite());
  CHECK_FALSE(quotient_dimension(1, ideal({"x*y"}, XY), LocalOrder::anti_graded(2)).finite());
  CHECK_FALSE(quotient_dimension(1, {ModuleElement({Polynomial(XY)})}, LocalOrder::anti_graded(2)).finite());
}

TEST_CASE("degree guard fails loudly") {
  const Ring XY = make_ring("x,y");
  CHECK_THROWS_AS(quotient_dimension(1, ideal({"x^12", "y"}, XY), LocalOrder::anti_graded(2), 5), std::runtime_error);
  CHECK(*quotient_dimension(1, ideal({"x^12", "y"}, XY), LocalOrder::anti_graded(2), 11).dimension == 12);
}

TEST_CASE("ideal membership in the local ring") {
  const Ring X = make_ring("x");
  const LocalOrder o = LocalOrder::anti_graded(1);
  CHECK(ideal_membership(P("x", X), {P("x-x^2", X)}, o));
  CHECK_FALSE(ideal_membership(P("x", X), {P("x^2", X)}, o));
  CHECK(ideal_membership(Polynomial(X), {P("x^2", X)}, o));
  const Ring XY = make_ring("x,y");
  CHECK(ideal_membership(P("x^2+y^2", XY), {P("x+y^3", XY), P("y-x^2", XY)}, LocalOrder::anti_graded(2)));
  CHECK_FALSE(ideal_membership(P("1+x", XY), {P("x", XY), P("y", XY)}, LocalOrder::anti_graded(2)));
}

TEST_CASE("unit inversion behind x in (x - x^2)") {
  // x = (x - x^2)(1 + x + ... + x^5) + x^7 and x^7 lies in m^6; the jet oracle sees membership.
  const Ring X = make_ring("x");
  const std::vector<oracle::Vector> gens = {{P("x-x^2", X)}};
  CHECK(oracle::jet_member({P("x", X)}, gens, 5));
  CHECK_FALSE(oracle::jet_member({P("1", X)}, gens, 5));
}

TEST_CASE("oracle agrees on the named examples") {
  const Ring XY = make_ring("x,y");
  const std::vector<oracle::Vector> cusp = {{P("y^2-x^3", XY)}, {P("-3*x^2", XY)}, {P("2*y", XY)}};
  CHECK(*oracle::jet_quotient_dimension(1, cusp, 10).dimension == 2);
  const std::vector<oracle::Vector> a3 = {{P("y^2-x^4", XY)}, {P("y", XY)}, {P("x^3", XY)}};
  CHECK(*oracle::jet_quotient_dimension(1, a3, 10).dimension == 3);
  const Ring R = make_ring("x,y,z");
  std::vector<oracle::Vector> pres;
  for (const auto& g : quadruple_presentation(R)) pres.push_back(g.components());
  CHECK(*oracle::jet_quotient_dimension(2, pres, 10).dimension == 7);
  const std::vector<oracle::Vector> line = {{P("x^2", XY)}};
  const auto grow = oracle::jet_quotient_dimension(1, line, 8);
  CHECK_FALSE(grow.dimension);
  CHECK(grow.sequence.back() > grow.sequence.front());
}

TEST_CASE("standard basis is idempotent and staircase complements are closed under division") {
  const Ring R = make_ring("x,y,z");
  const LocalOrder o = LocalOrder::anti_graded(3, 2);
  const StandardBasis sb = standard_basis(quadruple_presentation(R), o);
  const StandardBasis again = standard_basis(sb.generators(), o);
  CHECK(sb.staircase() == again.staircase());
  const auto q = quotient_basis(sb);
  for (const auto& m : q.basis)
    for (std::size_t j = 0; j < 3; ++j)
      if (m.monomial[j] > 0) {
        const StandardMonomial d{m.component, m.monomial.with_exponent(j, m.monomial[j] - 1)};
        CHECK(std::find(q.basis.begin(), q.basis.end(), d) != q.basis.end());
      }
}
