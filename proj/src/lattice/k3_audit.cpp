#include "singkit/lattice/k3_audit.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "singkit/poly/parser.hpp"

namespace singkit::lattice {

namespace {

CheckLine line(std::string name, long lhs, long rhs) {
  return {std::move(name), std::to_string(lhs), std::to_string(rhs), lhs == rhs};
}

CheckLine line(std::string name, const SurfaceClass& lhs, const SurfaceClass& rhs) {
  return {std::move(name), lhs.to_string(), rhs.to_string(), lhs == rhs};
}

void reject_excluded(long p, long n) {
  if ((p == 3 || p == 4) && n == 1)
    throw std::invalid_argument("(p,n) = (" + std::to_string(p) + ",1) is excluded: n >= 2 is required when p = 3 or 4");
}

// Symbolic identity over Q[n, l].
CheckLine identity(std::string name, const std::string& lhs, const std::string& rhs) {
  const poly::Ring R = poly::make_ring("n,l");
  const poly::Polynomial a = poly::parse_polynomial(lhs, R);
  const poly::Polynomial b = poly::parse_polynomial(rhs, R);
  return {std::move(name), lhs + " -> " + a.to_string(), rhs + " -> " + b.to_string(), a == b};
}

}  // namespace

bool CheckReport::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& c) { return c.ok; });
}

Polarization polarization(long p, long n) {
  if (p < 3 || n < 1) throw std::invalid_argument("need p >= 3 and n >= 1");
  return {p, n, p / 2, p % 2 == 1 ? SurfaceKind::F0 : SurfaceKind::F1};
}

ScrollClasses scroll_classes(const Polarization& pol) {
  const SurfaceKind k = pol.kind;
  const long nl = pol.n * pol.l;
  const SurfaceClass s = sigma(k), F = fiber(k);
  const SurfaceClass h = s + F * pol.l;
  if (k == SurfaceKind::F0) return {s, F, s + F * (nl - 1), anticanonical(k), h};
  return {s + F, F, s + F * (nl - pol.n), anticanonical(k), h};
}

CheckReport decomposition_check(long p, long n) {
  const Polarization pol = polarization(p, n);
  reject_excluded(p, n);
  const ScrollClasses c = scroll_classes(pol);
  CheckReport r;
  r.lines.push_back(line("(n-1)C + D + L = nH", c.c * (n - 1) + c.d + c.l, c.h * n));
  return r;
}

CheckReport degree_on_E_check(long p, long n) {
  const Polarization pol = polarization(p, n);
  const ScrollClasses c = scroll_classes(pol);
  const long nl = n * pol.l;
  CheckReport r;
  if (pol.kind == SurfaceKind::F0) {
    r.lines.push_back(line("L.E = (2nl-3) + 2 + 1", intersect(c.l, c.e), (2 * nl - 3) + 2 + 1));
    r.lines.push_back(line("tacnode contact degree 2nl-3 >= 0", std::min(2 * nl - 3, 0L), 0));
    r.lines.push_back(line("C.E = 2", intersect(c.c, c.e), 2));
  } else {
    r.lines.push_back(line("L.E = (2nl-2n-2) + 2 + 1", intersect(c.l, c.e), (2 * nl - 2 * n - 2) + 2 + 1));
    r.lines.push_back(line("tacnode contact degree 2nl-2n-2 >= 0", std::min(2 * nl - 2 * n - 2, 0L), 0));
    r.lines.push_back(line("C.E = 3", intersect(c.c, c.e), 3));
  }
  r.lines.push_back(line("D.E = 1 + 1", intersect(c.d, c.e), 2));
  r.lines.push_back(line("H.E = p + 1", intersect(c.h, c.e), p + 1));
  return r;
}

GenusDim pa_dim_nH(long p, long n) {
  if (p < 2 || n < 1) throw std::invalid_argument("need p >= 2 and n >= 1");
  const long pa = 1 + n * n * (p - 1);
  return {pa, pa};
}

TargetReport tuple_targets(long p, long n) {
  const Polarization pol = polarization(p, n);
  if (p == 4 && n == 1) throw std::invalid_argument("(p,n) = (4,1) is excluded");
  TargetReport r;
  if (p % 2 == 0) {
    r.target = n * (p - 2) - 3;
    r.identity = identity("n(p-2)-3 = 2nl-2n-3 for p = 2l", "n*(2*l-2)-3", "2*n*l-2*n-3");
  } else {
    r.target = n * (p - 1) - 4;
    r.identity = identity("n(p-1)-4 = 2nl-4 for p = 2l+1", "n*(2*l+1-1)-4", "2*n*l-4");
  }
  (void)pol;
  if (r.target < 0)
    throw std::invalid_argument("target " + std::to_string(r.target) + " is negative: no configuration");
  return r;
}

std::string BudgetEntry::label() const {
  switch (kind) {
    case SingKind::Node: return "Node";
    case SingKind::TripleP: return "TripleP";
    case SingKind::QuadrupleP: return "QuadrupleP";
    case SingKind::A: return "A(" + std::to_string(param) + ")";
    case SingKind::Tacnode: break;
  }
  return "Tacnode(" + std::to_string(param) + ")";
}

std::vector<SingularityBudget> enumerate_budgets(long p, long n, long m) {
  const long target = tuple_targets(p, n).target;
  const long pa = pa_dim_nH(p, n).pa;
  const long nodes = pa - target - 4;
  if (nodes < 0) throw std::invalid_argument("node count would be negative");
  std::vector<SingularityBudget> out;
  const long top = std::max(m, 1L);
  std::vector<long> d(static_cast<std::size_t>(std::max(top - 1, 0L)), 0);
  // d[i] is d_{i+2}. The walk emits d in increasing lexicographic order; reversed below.
  std::function<void(long, long)> walk = [&](long k, long remaining) {
    if (k < 2) {
      if (remaining != 0) return;
      SingularityBudget b;
      b.d = d;
      b.entries.push_back({SingKind::TripleP, 0, 1});
      if (nodes > 0) b.entries.push_back({SingKind::Node, 0, nodes});
      for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > 0) b.entries.push_back({SingKind::A, static_cast<long>(i) + 1, d[i]});
      out.push_back(std::move(b));
      return;
    }
    for (long c = remaining / (k - 1); c >= 0; --c) {
      d[static_cast<std::size_t>(k - 2)] = c;
      walk(k - 1, remaining - c * (k - 1));
    }
    d[static_cast<std::size_t>(k - 2)] = 0;
  };
  walk(top, target);
  std::reverse(out.begin(), out.end());
  return out;
}

long es_expected_dim(long dimD, const SingularityBudget& b) {
  long dim = dimD;
  for (const auto& e : b.entries) {
    switch (e.kind) {
      case SingKind::TripleP: dim -= 4 * e.count; break;
      case SingKind::Node: dim -= e.count; break;
      case SingKind::A: dim -= e.param * e.count; break;
      case SingKind::Tacnode: dim -= (2 * e.param - 1) * e.count; break;
      case SingKind::QuadrupleP: throw std::invalid_argument("quadruple points have no assigned cost");
    }
  }
  return dim;
}

bool LedgerReport::ok() const {
  return std::all_of(steps.begin(), steps.end(), [](const LedgerStep& s) { return s.agrees || !s.asserted; });
}

std::vector<LedgerStep> LedgerReport::discrepancies() const {
  std::vector<LedgerStep> out;
  std::copy_if(steps.begin(), steps.end(), std::back_inserter(out), [](const LedgerStep& s) { return !s.agrees; });
  return out;
}

LedgerReport proof_ledger(long p, long n) {
  const Polarization pol = polarization(p, n);
  const ScrollClasses c = scroll_classes(pol);
  const long l = pol.l;
  const long nl = n * l;
  const long lc = intersect(c.l, c.c);
  const long dc = intersect(c.d, c.c);
  LedgerReport r{pol, {}, 0, 0};
  const auto add = [&r](std::string name, std::string claimed, std::string computed, bool agrees, bool asserted) {
    r.steps.push_back({std::move(name), std::move(claimed), std::move(computed), agrees, asserted});
  };
  const auto num = [&add](std::string name, long claimed, long computed, bool asserted) {
    add(std::move(name), std::to_string(claimed), std::to_string(computed), claimed == computed, asserted);
  };

  if (p % 2 == 1) {
    num("L.C = nl-1", nl - 1, lc, true);
    num("D.C = 1", 1, dc, true);
    const long nodes_lc = 2 * (n - 1) * lc;
    const long nodes_dc = 2 * (n - 1) * dc;
    num("nodes on L cut by C: 2(n-1)(nl-1)", 2 * (n - 1) * (nl - 1), nodes_lc, true);
    num("nodes on D cut by C: 2n-2", 2 * n - 2, nodes_dc, true);
    const long hq = intersect(c.l, c.e) - 3;
    num("tacnode block dimension 2nl-3", 2 * nl - 3, hq, true);
    r.inventory_total = nodes_lc + nodes_dc + 1 + 5;

    const CheckLine expand = identity("2(n-1)(nl-1)+2n-2+1+5 = 2n^2l-2nl-2n+2+2n+4",
                                      "2*(n-1)*(n*l-1)+2*n-2+1+5", "2*n^2*l-2*n*l-2*n+2+2*n+4");
    add("expansion of the inventory", expand.rhs, expand.lhs, expand.ok, true);
    const CheckLine total = identity("2n^2l-2nl-2n+2+2n+4 = 2n^2l+2", "2*n^2*l-2*n*l-2*n+2+2*n+4", "2*n^2*l+2");
    add("claimed total 2n^2l+2 (identity in n, l)", total.rhs, total.lhs, total.ok, false);
    num("claimed total 2n^2l+2 at this (n, l)", 2 * n * n * l + 2, r.inventory_total, false);
    num("dim|nH| + 1", pa_dim_nH(p, n).dim + 1, r.inventory_total, false);

    r.tprime_total = r.inventory_total + hq;
    const CheckLine tprime = identity("inventory + (2nl-3) = 2n^2l+3", "2*(n-1)*(n*l-1)+2*n-2+1+5+2*n*l-3", "2*n^2*l+3");
    add("dim T' = 2n^2l+3 (identity in n, l)", tprime.rhs, tprime.lhs, tprime.ok, true);
    num("dim T' at this (n, l)", 2 * n * n * l + 3, r.tprime_total, true);
  } else {
    num("L.C = nl-n", nl - n, lc, true);
    num("D.C = 1", 1, dc, true);
    const long nodes = 2 * (n - 1) * lc;
    num("nodes: 2(n-1)(nl-n)", 2 * (n - 1) * (nl - n), nodes, true);
    const long tac = intersect(c.l, c.e) - 3;
    num("big tacnode contact 2nl-2n-2", 2 * nl - 2 * n - 2, tac, true);
    // n-1 simple tacnodes (2 conditions each), the quadruple-point block 5.
    r.inventory_total = nodes + 2 * (n - 1) + 5;
    r.tprime_total = r.inventory_total + tac;
    add("even inventory total (no claimed target)", "-", std::to_string(r.inventory_total), true, false);
    add("even total with tacnode block (no claimed target)", "-", std::to_string(r.tprime_total), true, false);
  }
  return r;
}

BlowupResult blowup_restriction(long m_F) {
  if (m_F < 0) throw std::invalid_argument("m_F must be non-negative");
  BlowupResult r;
  r.cls = {SurfaceKind::F1, m_F, 2 * m_F - 3};
  r.effective = effective(r.cls);
  r.minimal = r.effective && m_F == 2;
  const SurfaceClass s = sigma(SurfaceKind::F1);
  if (r.effective && r.cls.s > 0 && intersect(r.cls, s) < 0) r.decomposition = {s, r.cls - s};
  return r;
}

}  // namespace singkit::lattice
