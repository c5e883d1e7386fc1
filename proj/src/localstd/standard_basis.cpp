#include "singkit/localstd/standard_basis.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace singkit::localstd {

namespace {

using poly::Monomial;

struct Term {
  Monomial mono;
  std::size_t comp;
  Rational coeff;
};

// Terms strictly descending in the local order; never stores a zero coefficient.
struct LocalVector {
  std::vector<Term> terms;
  long max_degree = 0;  // largest shifted degree among terms

  bool empty() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
};

class Engine {
 public:
  Engine(const LocalOrder& order, poly::Ring ring, std::size_t rank)
      : order_(order), ring_(std::move(ring)), rank_(rank) {}

  LocalVector from_element(const ModuleElement& e) const {
    if (e.rank() != rank_) throw std::invalid_argument("rank mismatch");
    if (!poly::same_ring(e.ring(), ring_)) throw std::invalid_argument("module elements live over different variable sets");
    if (e.ring()->size() != order_.nvars() || e.rank() != order_.rank())
      throw std::invalid_argument("order does not match the module");
    LocalVector v;
    for (std::size_t i = 0; i < rank_; ++i)
      for (const auto& [m, c] : e[i].terms()) v.terms.push_back({m, i, c});
    std::sort(v.terms.begin(), v.terms.end(),
              [&](const Term& a, const Term& b) { return order_.compare(a.mono, a.comp, b.mono, b.comp) > 0; });
    refresh(v);
    return v;
  }

  ModuleElement to_element(const LocalVector& v) const {
    std::vector<poly::Polynomial> c(rank_, poly::Polynomial(ring_));
    for (const auto& t : v.terms) c[t.comp] += poly::Polynomial(ring_, t.mono, t.coeff);
    return ModuleElement(std::move(c));
  }

  long ecart(const LocalVector& v) const { return v.max_degree - deg(v.lead()); }

  // a - coeff * mono * b
  LocalVector sub_scaled(const LocalVector& a, const Rational& coeff, const Monomial& mono,
                         const LocalVector& b) const {
    LocalVector out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
      if (j == b.terms.size()) {
        out.terms.push_back(a.terms[i++]);
        continue;
      }
      Term bt{b.terms[j].mono * mono, b.terms[j].comp, -coeff * b.terms[j].coeff};
      if (i == a.terms.size()) {
        out.terms.push_back(std::move(bt));
        ++j;
        continue;
      }
      const int cmp = order_.compare(a.terms[i].mono, a.terms[i].comp, bt.mono, bt.comp);
      if (cmp > 0) {
        out.terms.push_back(a.terms[i++]);
      } else if (cmp < 0) {
        out.terms.push_back(std::move(bt));
        ++j;
      } else {
        Rational s = a.terms[i].coeff + bt.coeff;
        if (s != 0) out.terms.push_back({bt.mono, bt.comp, std::move(s)});
        ++i;
        ++j;
      }
    }
    refresh(out);
    return out;
  }

  // Mora normal form with the ecart-driven reducer choice.
  LocalVector normal_form(LocalVector h, std::vector<LocalVector> t) const {
    while (!h.empty()) {
      const Term& lh = h.lead();
      std::optional<std::size_t> best;
      long best_ecart = 0;
      for (std::size_t i = 0; i < t.size(); ++i) {
        const Term& lg = t[i].lead();
        if (lg.comp != lh.comp || !lg.mono.divides(lh.mono)) continue;
        const long e = ecart(t[i]);
        if (!best || e < best_ecart) {
          best = i;
          best_ecart = e;
        }
      }
      if (!best) break;
      LocalVector g = t[*best];
      if (best_ecart > ecart(h)) t.push_back(h);
      const Rational factor = h.lead().coeff / g.lead().coeff;
      const Monomial shift = h.lead().mono / g.lead().mono;
      h = sub_scaled(h, factor, shift, g);
    }
    return h;
  }

  LocalVector s_vector(const LocalVector& a, const LocalVector& b) const {
    const Monomial l = a.lead().mono.lcm(b.lead().mono);
    LocalVector lhs = scale(a, Rational(1) / a.lead().coeff, l / a.lead().mono);
    return sub_scaled(lhs, Rational(1) / b.lead().coeff, l / b.lead().mono, b);
  }

  long deg(const Term& t) const { return order_.degree(t.mono, t.comp); }

 private:
  LocalVector scale(const LocalVector& v, const Rational& c, const Monomial& m) const {
    LocalVector out;
    for (const auto& t : v.terms) out.terms.push_back({t.mono * m, t.comp, t.coeff * c});
    refresh(out);
    return out;
  }

  void refresh(LocalVector& v) const {
    v.max_degree = 0;
    bool first = true;
    for (const auto& t : v.terms) {
      const long d = deg(t);
      if (first || d > v.max_degree) v.max_degree = d;
      first = false;
    }
  }

  const LocalOrder& order_;
  poly::Ring ring_;
  std::size_t rank_;
};

bool divides(const StandardMonomial& a, const StandardMonomial& b) {
  return a.component == b.component && a.monomial.divides(b.monomial);
}

std::vector<StandardMonomial> minimize(std::vector<StandardMonomial> leads) {
  std::sort(leads.begin(), leads.end());
  leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
  std::vector<StandardMonomial> out;
  for (std::size_t i = 0; i < leads.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < leads.size() && !redundant; ++j)
      redundant = j != i && divides(leads[j], leads[i]);
    if (!redundant) out.push_back(leads[i]);
  }
  return out;
}

}  // namespace

StandardBasis::StandardBasis(std::vector<ModuleElement> generators, std::vector<StandardMonomial> leading,
                             LocalOrder order, std::size_t rank)
    : gens_(std::move(generators)),
      leading_(std::move(leading)),
      staircase_(minimize(leading_)),
      order_(std::move(order)),
      rank_(rank) {}

bool StandardBasis::in_leading_module(const StandardMonomial& m) const {
  return std::any_of(staircase_.begin(), staircase_.end(), [&](const auto& s) { return divides(s, m); });
}

StandardMonomial leading_term(const ModuleElement& e, const LocalOrder& order) {
  std::optional<StandardMonomial> best;
  for (std::size_t i = 0; i < e.rank(); ++i)
    for (const auto& [m, c] : e[i].terms())
      if (!best || order.compare(m, i, best->monomial, best->component) > 0) best = StandardMonomial{i, m};
  if (!best) throw std::invalid_argument("zero element has no leading term");
  return *best;
}

ModuleElement mora_normal_form(const ModuleElement& e, const std::vector<ModuleElement>& basis,
                               const LocalOrder& order) {
  Engine eng(order, e.ring(), e.rank());
  std::vector<LocalVector> t;
  for (const auto& b : basis) {
    LocalVector v = eng.from_element(b);
    if (!v.empty()) t.push_back(std::move(v));
  }
  return eng.to_element(eng.normal_form(eng.from_element(e), std::move(t)));
}

StandardBasis standard_basis(const std::vector<ModuleElement>& gens, const LocalOrder& order) {
  if (gens.empty()) throw std::invalid_argument("standard basis needs at least one generator");
  const std::size_t rank = gens.front().rank();
  Engine eng(order, gens.front().ring(), rank);

  std::vector<LocalVector> s;
  for (const auto& g : gens) {
    LocalVector v = eng.from_element(g);
    if (!v.empty()) s.push_back(std::move(v));
  }

  struct Pair {
    std::size_t i, j;
    long degree;
  };
  std::vector<Pair> pairs;
  auto add_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      const Term& a = s[i].lead();
      const Term& b = s[k].lead();
      if (a.comp != b.comp) continue;
      pairs.push_back({i, k, order.degree(a.mono.lcm(b.mono), a.comp)});
    }
  };
  for (std::size_t k = 0; k < s.size(); ++k) add_pairs(k);

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
      return std::tie(x.degree, x.i, x.j) < std::tie(y.degree, y.i, y.j);
    });
    const Pair p = *it;
    pairs.erase(it);
    LocalVector h = eng.normal_form(eng.s_vector(s[p.i], s[p.j]), s);
    if (h.empty()) continue;
    s.push_back(std::move(h));
    add_pairs(s.size() - 1);
  }

  std::vector<ModuleElement> out;
  std::vector<StandardMonomial> leads;
  for (const auto& v : s) {
    out.push_back(eng.to_element(v));
    leads.push_back({v.lead().comp, v.lead().mono});
  }
  return StandardBasis(std::move(out), std::move(leads), order, rank);
}

QuotientBasis quotient_basis(const StandardBasis& sb, int degree_guard) {
  const std::size_t n = sb.order().nvars();
  QuotientBasis result;
  for (std::size_t comp = 0; comp < sb.rank(); ++comp) {
    // Box bounds from pure powers in the staircase; a missing one means infinite.
    std::vector<int> bound(n, -1);
    bool has_unit = false;
    for (const auto& s : sb.staircase()) {
      if (s.component != comp) continue;
      if (s.monomial.is_one()) has_unit = true;
      std::size_t support = 0, var = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (s.monomial[j] > 0) {
          ++support;
          var = j;
        }
      if (support == 1 && (bound[var] < 0 || s.monomial[var] < bound[var])) bound[var] = s.monomial[var];
    }
    if (has_unit) continue;
    if (std::any_of(bound.begin(), bound.end(), [](int b) { return b < 0; })) return QuotientBasis{};

    std::vector<int> exps(n, 0);
    std::function<void(std::size_t, int)> walk = [&](std::size_t j, int degree) {
      if (j == n) {
        StandardMonomial m{comp, Monomial(exps)};
        if (sb.in_leading_module(m)) return;
        if (degree > degree_guard)
          throw std::runtime_error("quotient basis exceeds the degree guard " + std::to_string(degree_guard));
        result.basis.push_back(std::move(m));
        return;
      }
      for (int e = 0; e < bound[j]; ++e) {
        exps[j] = e;
        walk(j + 1, degree + e);
      }
      exps[j] = 0;
    };
    walk(0, 0);
  }
  std::sort(result.basis.begin(), result.basis.end(), [](const StandardMonomial& a, const StandardMonomial& b) {
    if (a.component != b.component) return a.component < b.component;
    const int da = a.monomial.total_degree();
    const int db = b.monomial.total_degree();
    if (da != db) return da < db;
    return a.monomial > b.monomial;
  });
  result.dimension = result.basis.size();
  return result;
}

QuotientBasis quotient_dimension(std::size_t rank, const std::vector<ModuleElement>& gens,
                                 const LocalOrder& order, int degree_guard) {
  std::vector<ModuleElement> nonzero;
  for (const auto& g : gens) {
    if (g.rank() != rank) throw std::invalid_argument("rank mismatch");
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) {
    if (order.nvars() > 0) return QuotientBasis{};
    QuotientBasis q;
    for (std::size_t i = 0; i < rank; ++i) q.basis.push_back({i, Monomial(0)});
    q.dimension = rank;
    return q;
  }
  return quotient_basis(standard_basis(nonzero, order), degree_guard);
}

bool ideal_membership(const poly::Polynomial& p, const std::vector<poly::Polynomial>& gens,
                      const LocalOrder& order) {
  if (p.is_zero()) return true;
  std::vector<ModuleElement> g;
  for (const auto& q : gens) {
    if (!poly::same_ring(q.ring(), p.ring())) throw std::invalid_argument("polynomials live over different variable sets");
    if (!q.is_zero()) g.push_back(ModuleElement({q}));
  }
  if (g.empty()) return false;
  const StandardBasis sb = standard_basis(g, order);
  return mora_normal_form(ModuleElement({p}), sb.generators(), order).is_zero();
}

}  // namespace singkit::localstd
