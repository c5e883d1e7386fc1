#include <doctest.h>

#include <random>

#include "singkit/lattice/k3_audit.hpp"

using namespace singkit::lattice;

TEST_CASE("intersection form") {
  const auto F0 = SurfaceKind::F0, F1 = SurfaceKind::F1;
  CHECK(intersect(sigma(F1), sigma(F1)) == -1);
  CHECK(intersect(sigma(F0), sigma(F0)) == 0);
  CHECK(intersect(fiber(F1), fiber(F1)) == 0);
  CHECK(intersect(sigma(F0), fiber(F0)) == 1);
  for (long l = 1; l <= 6; ++l) CHECK(intersect(sigma(F0) + fiber(F0) * l, anticanonical(F0)) == 2 * l + 2);
  CHECK(intersect(anticanonical(F0), anticanonical(F0)) == 8);
  CHECK_THROWS(intersect(sigma(F0), sigma(F1)));
}

TEST_CASE("intersection form is symmetric and bilinear") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-20, 20);
  for (const auto k : {SurfaceKind::F0, SurfaceKind::F1}) {
    for (int i = 0; i < 200; ++i) {
      const SurfaceClass a{k, d(rng), d(rng)}, b{k, d(rng), d(rng)}, c{k, d(rng), d(rng)};
      const long t = d(rng);
      CHECK(intersect(a, b) == intersect(b, a));
      CHECK(intersect(a + b, c) == intersect(a, c) + intersect(b, c));
      CHECK(intersect(a * t, b) == t * intersect(a, b));
      CHECK_NOTHROW(arithmetic_genus(a));
    }
  }
}

TEST_CASE("arithmetic genus") {
  for (const auto k : {SurfaceKind::F0, SurfaceKind::F1}) {
    CHECK(arithmetic_genus(anticanonical(k)) == 1);
    CHECK(arithmetic_genus(sigma(k)) == 0);
    for (long l = 0; l <= 6; ++l) CHECK(arithmetic_genus(sigma(k) + fiber(k) * l) == 0);
  }
  CHECK(anticanonical(SurfaceKind::F1) == SurfaceClass{SurfaceKind::F1, 2, 3});
}

TEST_CASE("effectivity") {
  CHECK(effective(SurfaceClass{SurfaceKind::F1, 0, 0}));
  CHECK(effective(SurfaceClass{SurfaceKind::F1, 2, 1}));
  CHECK_FALSE(effective(SurfaceClass{SurfaceKind::F1, 1, -1}));
}

TEST_CASE("decompositions") {
  CHECK(decomposition_check(5, 2).ok());
  CHECK(decomposition_check(4, 2).ok());
  CHECK(decomposition_check(5, 1).ok());
  const auto c = scroll_classes(polarization(5, 2));
  CHECK(c.l == SurfaceClass{SurfaceKind::F0, 1, 3});
  CHECK_THROWS(decomposition_check(3, 1));
  CHECK_THROWS(decomposition_check(4, 1));
  CHECK_THROWS(decomposition_check(2, 3));
}

TEST_CASE("degrees on E") {
  const auto odd = degree_on_E_check(5, 1);
  CHECK(odd.ok());
  CHECK(odd.lines.front().lhs == "4");
  const auto even = degree_on_E_check(4, 1);
  CHECK(even.ok());
  CHECK(even.lines.front().lhs == "3");
  CHECK_FALSE(degree_on_E_check(3, 1).ok());  // negative contact degree 2nl-3
  for (long p = 3; p <= 12; ++p)
    for (long n = 1; n <= 4; ++n) {
      if ((p == 3 || p == 4) && n == 1) continue;
      CAPTURE(p);
      CAPTURE(n);
      CHECK(decomposition_check(p, n).ok());
      CHECK(degree_on_E_check(p, n).ok());
    }
}

TEST_CASE("genus and dimension of |nH|") {
  CHECK(pa_dim_nH(5, 1).pa == 5);
  CHECK(pa_dim_nH(4, 2).pa == 13);
  CHECK(pa_dim_nH(2, 1).dim == 2);
  CHECK_THROWS(pa_dim_nH(1, 1));
}

TEST_CASE("tuple targets") {
  CHECK(tuple_targets(5, 1).target == 0);
  CHECK(tuple_targets(6, 1).target == 1);
  CHECK(tuple_targets(3, 2).target == 0);
  CHECK(tuple_targets(6, 1).identity.ok);
  CHECK(tuple_targets(7, 3).identity.ok);
  CHECK_THROWS(tuple_targets(4, 1));
  CHECK_THROWS(tuple_targets(3, 1));
}

TEST_CASE("budgets") {
  const auto b = enumerate_budgets(5, 1, 2);
  REQUIRE(b.size() == 1);
  REQUIRE(b[0].entries.size() == 2);
  CHECK(b[0].entries[0].label() == "TripleP");
  CHECK(b[0].entries[0].count == 1);
  CHECK(b[0].entries[1].label() == "Node");
  CHECK(b[0].entries[1].count == 1);
  CHECK(es_expected_dim(pa_dim_nH(5, 1).dim, b[0]) == 0);

  const auto one = enumerate_budgets(6, 1, 2);  // target 1
  REQUIRE(one.size() == 1);
  CHECK(one[0].d == std::vector<long>{1});

  const auto four = enumerate_budgets(3, 4, 3);  // target 4*2-4 = 4
  std::vector<std::vector<long>> ds;
  for (const auto& x : four) ds.push_back(x.d);
  CHECK(ds == std::vector<std::vector<long>>{{4, 0}, {2, 1}, {0, 2}});

  SingularityBudget empty;
  CHECK(es_expected_dim(7, empty) == 7);
  SingularityBudget node{{{SingKind::Node, 0, 1}}, {}};
  CHECK(es_expected_dim(1, node) == 0);
  SingularityBudget tac{{{SingKind::Tacnode, 2, 1}}, {}};
  CHECK(es_expected_dim(3, tac) == 0);
  SingularityBudget quad{{{SingKind::QuadrupleP, 0, 1}}, {}};
  CHECK_THROWS(es_expected_dim(10, quad));
}

TEST_CASE("budget count is nondecreasing in m") {
  for (long p = 5; p <= 9; ++p) {
    std::size_t prev = 0;
    for (long m = 2; m <= 6; ++m) {
      const std::size_t c = enumerate_budgets(p, 2, m).size();
      CHECK(c >= prev);
      prev = c;
    }
  }
}

TEST_CASE("proof ledger, odd case") {
  const LedgerReport r = proof_ledger(5, 2);  // l = 2
  CHECK(r.ok());
  CHECK(r.inventory_total == 14);
  CHECK(r.tprime_total == 19);
  const auto bad = r.discrepancies();
  REQUIRE_FALSE(bad.empty());
  for (const auto& s : bad) CHECK_FALSE(s.asserted);

  const LedgerReport agree = proof_ledger(5, 1);  // nl = 2: the claimed total happens to hold
  CHECK(agree.inventory_total == 6);
  CHECK(agree.inventory_total == pa_dim_nH(5, 1).dim + 1);
}

TEST_CASE("proof ledger, even case is reported without a target") {
  const LedgerReport r = proof_ledger(6, 2);
  CHECK(r.ok());
  CHECK(r.inventory_total == 2 * 1 * 4 + 2 + 5);
}

TEST_CASE("blow-up restriction") {
  const BlowupResult two = blowup_restriction(2);
  CHECK(two.cls == SurfaceClass{SurfaceKind::F1, 2, 1});
  CHECK(two.effective);
  CHECK(two.minimal);
  REQUIRE(two.decomposition.size() == 2);
  CHECK(two.decomposition[0] == sigma(SurfaceKind::F1));
  CHECK(two.decomposition[1] == SurfaceClass{SurfaceKind::F1, 1, 1});
  CHECK_FALSE(blowup_restriction(1).effective);
  CHECK_FALSE(blowup_restriction(0).effective);
  CHECK(blowup_restriction(3).effective);
  CHECK_FALSE(blowup_restriction(3).minimal);
  CHECK_THROWS(blowup_restriction(-1));
}
