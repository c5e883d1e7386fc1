#include "singkit/versal/stratum.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace singkit::versal {

using poly::Polynomial;

namespace {

// Elimination by the two safe moves: a monomial equation in a single unknown
// forces it to 0, and an equation linear in an unknown with a constant
// coefficient is solved for it. Factors of known-nonzero variables are dropped.
class Eliminator {
 public:
  Eliminator(poly::Ring ring, std::set<std::size_t> nonzero, std::vector<std::size_t> preference)
      : ring_(std::move(ring)), nonzero_(std::move(nonzero)), preference_(std::move(preference)) {}

  std::vector<Polynomial> run(std::vector<Polynomial> eqs) {
    for (;;) {
      std::vector<Polynomial> cur;
      for (auto& e : eqs) {
        Polynomial s = strip(e);
        if (s.is_zero()) continue;
        if (s.is_constant()) throw std::runtime_error("inconsistent system: " + e.to_string() + " = 0");
        if (std::find(cur.begin(), cur.end(), s) == cur.end()) cur.push_back(std::move(s));
      }
      eqs = std::move(cur);
      if (!step(eqs)) return eqs;
    }
  }

  const std::map<std::size_t, Polynomial>& solved() const { return solved_; }

 private:
  Polynomial strip(const Polynomial& e) const {
    if (e.is_zero()) return e;
    const poly::Monomial content = e.monomial_content();
    std::vector<int> drop(ring_->size(), 0);
    for (std::size_t v : nonzero_) drop[v] = content[v];
    return e.divide_by_monomial(poly::Monomial(drop));
  }

  void assign(std::size_t v, const Polynomial& value, std::vector<Polynomial>& eqs) {
    if (nonzero_.count(v) && value.is_zero())
      throw std::runtime_error("system forces the nonzero variable " + ring_->name(v) + " to vanish");
    for (auto& [w, val] : solved_) val = val.substitute(v, value);
    solved_.emplace(v, value);
    for (auto& e : eqs) e = e.substitute(v, value);
  }

  bool step(std::vector<Polynomial>& eqs) {
    for (const auto& e : eqs) {
      if (e.size() != 1) continue;
      const poly::Monomial& m = e.terms().begin()->first;
      std::vector<std::size_t> support;
      for (std::size_t v = 0; v < m.size(); ++v)
        if (m[v] > 0) support.push_back(v);
      if (support.size() != 1) throw std::runtime_error("elimination needs a case split at " + e.to_string());
      assign(support.front(), Polynomial(ring_), eqs);
      return true;
    }
    for (std::size_t v : preference_) {
      for (const auto& e : eqs) {
        if (e.degree_in(v) != 1) continue;
        const auto c = e.coefficients_in(v);
        if (!c[1].is_constant()) continue;
        assign(v, c[0] * (Rational(-1) / c[1].constant_term()), eqs);
        return true;
      }
    }
    return false;
  }

  poly::Ring ring_;
  std::set<std::size_t> nonzero_;
  std::vector<std::size_t> preference_;
  std::map<std::size_t, Polynomial> solved_;
};

std::vector<std::size_t> all_indices(const poly::Ring& r) {
  std::vector<std::size_t> out(r->size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

bool is_single_variable(const Polynomial& p) { return p.size() == 1 && p.total_degree() == 1; }

std::map<std::string, Rational> origin_values(const poly::Ring& r) {
  std::map<std::string, Rational> out;
  for (const auto& n : r->names()) out[n] = 0;
  return out;
}

Rational evaluate_at(const Polynomial& p, const std::map<std::string, Rational>& point) {
  Polynomial q = p;
  for (const auto& n : p.ring()->names()) {
    const auto it = point.find(n);
    if (it == point.end()) throw std::invalid_argument("missing value for parameter " + n);
    q = q.evaluate(n, it->second);
  }
  return q.constant_term();
}

}  // namespace

StratumDescription triple_point_stratum(const VersalFamily& fam, SignMode mode) {
  const PlaneModel model = eliminate_to_plane(fam, mode);
  const Polynomial& F = model.equation;
  const poly::Ring& R = F.ring();
  const std::size_t y = 0, z = 1;
  const std::size_t b1 = *R->index_of("b1");

  std::vector<Polynomial> sys = {F, F.derivative(y), F.derivative(z)};
  sys.push_back(sys[1].derivative(y));
  sys.push_back(sys[1].derivative(z));
  sys.push_back(sys[2].derivative(z));

  Eliminator elim(R, {y, b1}, all_indices(R));
  const std::vector<Polynomial> leftover = elim.run(sys);

  StratumDescription out;
  out.mode = mode;
  out.parameter_ring = fam.parameter_ring();
  const auto to_params = [&](const Polynomial& p) { return p.in_ring(out.parameter_ring).primitive(); };
  for (const auto& [v, value] : elim.solved())
    if (v != y && v != z) out.vanishing.push_back(to_params(Polynomial::variable(R, v) - value));
  for (const auto& e : leftover) {
    if (e.involves(y) || e.involves(z)) throw std::runtime_error("unresolved coordinate constraint " + e.to_string());
    out.vanishing.push_back(to_params(e));
  }
  out.vanishing.push_back(Polynomial::variable(out.parameter_ring, "b2"));
  out.vanishing.push_back(Polynomial::variable(out.parameter_ring, "b3"));
  std::sort(out.vanishing.begin(), out.vanishing.end(), [](const Polynomial& a, const Polynomial& b) {
    const bool la = is_single_variable(a), lb = is_single_variable(b);
    if (la != lb) return la;
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.to_string() < b.to_string();
  });
  out.nonvanishing.push_back(Polynomial::variable(out.parameter_ring, "b1"));

  const auto sy = elim.solved().find(y);
  const auto sz = elim.solved().find(z);
  if (sy != elim.solved().end() && sz != elim.solved().end() && !sy->second.involves(y) && !sy->second.involves(z) &&
      !sz->second.involves(y) && !sz->second.involves(z))
    out.witness = std::map<std::string, Polynomial>{{"y", sy->second.in_ring(out.parameter_ring)},
                                                    {"z", sz->second.in_ring(out.parameter_ring)}};
  return out;
}

bool StratumDescription::contains(const std::map<std::string, Rational>& point) const {
  for (const auto& v : vanishing)
    if (evaluate_at(v, point) != 0) return false;
  for (const auto& v : nonvanishing)
    if (evaluate_at(v, point) == 0) return false;
  return true;
}

std::vector<Rational> StratumDescription::witness_at(const std::map<std::string, Rational>& point) const {
  if (!witness) throw std::logic_error("stratum has no witness");
  return {evaluate_at(witness->at("y"), point), evaluate_at(witness->at("z"), point)};
}

std::string StratumDescription::format() const {
  std::string zeros, rest;
  for (const auto& v : vanishing) {
    if (is_single_variable(v)) {
      zeros += (zeros.empty() ? "" : "=") + v.to_string();
      continue;
    }
    const auto terms = v.sorted_terms();
    const Polynomial lhs(v.ring(), terms.front().first, terms.front().second);
    rest += ", " + lhs.to_string() + " = " + (lhs - v).to_string();
  }
  std::string out = zeros.empty() ? "" : zeros + "=0";
  if (out.empty() && !rest.empty()) rest.erase(0, 2);
  return out + rest;
}

GammaChecks check_gamma(const StratumDescription& s) {
  const poly::Ring& R = s.parameter_ring;
  const std::size_t n = R->size();
  // Jacobian of the vanishing constraints at the origin.
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : s.vanishing) {
    std::vector<Rational> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = evaluate_at(v.derivative(j), origin_values(R));
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  GammaChecks g;
  g.smooth_curve_at_origin = pivots.size() + 1 == n;
  g.tangent_inside_gamma = true;
  for (std::size_t c = 0; c < n; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
    std::vector<Rational> k(n, Rational(0));
    k[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = -rows[i][c];
    std::string dir;
    for (std::size_t j = 0; j < n; ++j) {
      if (k[j] == 0) continue;
      if (R->name(j)[0] == 'b') g.tangent_inside_gamma = false;
      const std::string coeff = k[j] == 1 ? "" : singkit::to_string(k[j]) + "*";
      dir += (dir.empty() ? "" : " + ") + coeff + "d/d" + R->name(j);
    }
    g.tangent_directions.push_back(dir);
  }

  std::vector<Polynomial> eqs = s.vanishing;
  for (const auto& name : R->names())
    if (name[0] == 'b') eqs.push_back(Polynomial::variable(R, name));
  try {
    Eliminator elim(R, {}, all_indices(R));
    const auto leftover = elim.run(eqs);
    g.meets_gamma_only_at_origin =
        leftover.empty() && elim.solved().size() == n &&
        std::all_of(elim.solved().begin(), elim.solved().end(), [](const auto& kv) { return kv.second.is_zero(); });
  } catch (const std::runtime_error&) {
    g.meets_gamma_only_at_origin = false;
  }
  return g;
}

}  // namespace singkit::versal
