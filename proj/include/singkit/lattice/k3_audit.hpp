#pragma once

// Arithmetic of degenerations of polarized K3 surfaces to unions of scrolls.
//
// p is the sectional genus, n the multiple of the polarization H, l = p / 2
// rounded down. Odd p = 2l+1 uses F0, even p = 2l uses F1. On the scroll,
// H restricts to sigma + l F and E is anticanonical.

#include <string>
#include <vector>

#include "singkit/lattice/surface.hpp"

namespace singkit::lattice {

struct CheckLine {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool ok = false;
};

struct CheckReport {
  std::vector<CheckLine> lines;
  bool ok() const;
};

struct Polarization {
  long p;
  long n;
  long l;
  SurfaceKind kind;  // F0 for odd p, F1 for even p
};

/// Requires p >= 3 and n >= 1.
Polarization polarization(long p, long n);

/// Classes (C, D, L) of one scroll component: C ~ sigma, D ~ F,
/// L ~ sigma + (nl-1)F for odd p; C ~ sigma + F, D ~ F, L ~ sigma + (nl-n)F
/// for even p.
struct ScrollClasses {
  SurfaceClass c, d, l, e, h;
};
ScrollClasses scroll_classes(const Polarization& pol);

/// (n-1)C + D + L = nH. Rejects (3,1) and (4,1): n >= 2 is needed for p = 3, 4.
CheckReport decomposition_check(long p, long n);

/// Intersection numbers with E against the degrees of the assigned divisors.
CheckReport degree_on_E_check(long p, long n);

struct GenusDim {
  long pa;
  long dim;
};

/// pa(nH) = 1 + n^2 (p - 1) = dim |nH|; requires p >= 2, n >= 1.
GenusDim pa_dim_nH(long p, long n);

struct TargetReport {
  long target;
  CheckLine identity;  // the closed form in n, l, checked symbolically
};

/// Even p: n(p-2) - 3 = 2nl - 2n - 3. Odd p: n(p-1) - 4 = 2nl - 4.
/// Throws std::invalid_argument for (4,1) and for a negative target.
TargetReport tuple_targets(long p, long n);

enum class SingKind { Node, Tacnode, QuadrupleP, TripleP, A };

struct BudgetEntry {
  SingKind kind;
  long param = 0;  // m for Tacnode(m), k for A(k)
  long count = 0;

  /// "TripleP", "Node", "A(2)", "Tacnode(3)".
  std::string label() const;
};

struct SingularityBudget {
  std::vector<BudgetEntry> entries;
  std::vector<long> d;  // d_2, ..., d_m; d_k counts A(k-1) points
};

/// Every (d_2..d_m) with sum (k-1) d_k = target, plus one triple point and
/// pa(nH) - target - 4 nodes. Listed in decreasing lexicographic order of d.
std::vector<SingularityBudget> enumerate_budgets(long p, long n, long m);

/// dimD - 4 #TripleP - sum k #A(k) - #Node - (2m-1) #Tacnode(m).
/// Throws std::invalid_argument for quadruple points (no cost assigned).
long es_expected_dim(long dimD, const SingularityBudget& b);

struct LedgerStep {
  std::string name;
  std::string claimed;
  std::string computed;
  bool agrees = false;
  bool asserted = false;  // a disagreement in an asserted step fails the ledger
};

struct LedgerReport {
  Polarization pol;
  std::vector<LedgerStep> steps;
  long inventory_total = 0;
  long tprime_total = 0;

  bool ok() const;
  std::vector<LedgerStep> discrepancies() const;
};

/// Singularity inventory recomputed from intersection numbers; the claimed
/// closed forms are checked by symbolic expansion in (n, l).
LedgerReport proof_ledger(long p, long n);

struct BlowupResult {
  SurfaceClass cls;
  bool effective = false;
  bool minimal = false;
  /// sigma + rest, when sigma is a fixed component (cls.sigma < 0).
  std::vector<SurfaceClass> decomposition;
};

/// m_F sigma + (2 m_F - 3) f on F1; requires m_F >= 0.
BlowupResult blowup_restriction(long m_F);

}  // namespace singkit::lattice
