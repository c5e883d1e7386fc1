#include "singkit/poly/weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace singkit::poly {

WeightSystem::WeightSystem(std::vector<Rational> weights) : a_(std::move(weights)) {
  for (const auto& w : a_)
    if (w <= 0) throw std::invalid_argument("weights must be positive");
}

Rational WeightSystem::degree(const Monomial& m) const {
  if (m.size() != a_.size()) throw std::invalid_argument("weight system length differs from variable count");
  Rational d = 0;
  for (std::size_t i = 0; i < a_.size(); ++i) d += a_[i] * m[i];
  return d;
}

DegreesWeights::DegreesWeights(std::vector<Rational> d, WeightSystem a)
    : degrees(std::move(d)), weights(std::move(a)) {}

DegreesWeights DegreesWeights::scaled(const Rational& lambda) const {
  if (lambda <= 0) throw std::invalid_argument("scaling factor must be positive");
  std::vector<Rational> d;
  for (const auto& x : degrees) d.emplace_back(x * lambda);
  std::vector<Rational> a;
  for (const auto& x : weights.values()) a.emplace_back(x * lambda);
  return DegreesWeights(std::move(d), WeightSystem(std::move(a)));
}

std::string DegreesWeights::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < degrees.size(); ++i) out += (i ? "," : "") + singkit::to_string(degrees[i]);
  out += "; ";
  for (std::size_t i = 0; i < weights.size(); ++i) out += (i ? "," : "") + singkit::to_string(weights[i]);
  return out + ")";
}

const Rational& Valuation::value() const {
  if (!value_) throw std::logic_error("valuation is infinite");
  return *value_;
}

bool operator==(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return *a.value_ == *b.value_;
}

bool operator<(const Valuation& a, const Valuation& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return *a.value_ < *b.value_;
}

std::string Valuation::to_string() const { return value_ ? singkit::to_string(*value_) : "inf"; }

Valuation weighted_valuation(const Polynomial& p, const WeightSystem& a) {
  if (p.is_zero()) return Valuation::infinity();
  std::optional<Rational> best;
  for (const auto& [m, c] : p.terms()) {
    Rational d = a.degree(m);
    if (!best || d < *best) best = d;
  }
  return Valuation(*best);
}

Polynomial lowest_weighted_form(const Polynomial& p, const WeightSystem& a) {
  Polynomial out(p.ring());
  const Valuation v = weighted_valuation(p, a);
  if (v.is_infinite()) return out;
  for (const auto& [m, c] : p.terms())
    if (a.degree(m) == v.value()) out += Polynomial(p.ring(), m, c);
  return out;
}

bool is_quasi_homogeneous(const Polynomial& p, const Rational& d, const WeightSystem& a) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& term) { return a.degree(term.first) == d; });
}

Valuation module_valuation(std::span<const Polynomial> g, const DegreesWeights& dw) {
  if (g.size() != dw.degrees.size()) throw std::invalid_argument("component count differs from degree count");
  Valuation best = Valuation::infinity();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Valuation v = weighted_valuation(g[i], dw.weights);
    if (v.is_infinite()) continue;
    const Valuation shifted(v.value() - dw.degrees[i]);
    if (shifted < best) best = shifted;
  }
  return best;
}

namespace {

using Row = std::vector<Rational>;

// Reduced row echelon form in place; returns pivot column per row.
std::vector<std::size_t> rref(std::vector<Row>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// coeffs . t >= rhs
struct Inequality {
  Row coeffs;
  Rational rhs;
};

// Fourier-Motzkin: finds t with every inequality satisfied, if any.
std::optional<Row> solve_inequalities(std::vector<Inequality> system, std::size_t nvars) {
  std::vector<std::vector<Inequality>> levels(nvars + 1);
  levels[nvars] = std::move(system);
  for (std::size_t v = nvars; v-- > 0;) {
    const auto& cur = levels[v + 1];
    std::vector<Inequality> lower, upper, next;
    for (const auto& ineq : cur) {
      if (ineq.coeffs[v] > 0) lower.push_back(ineq);
      else if (ineq.coeffs[v] < 0) upper.push_back(ineq);
      else next.push_back(ineq);
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        // lo: a t_v + ... >= r1 (a > 0);  up: -b t_v + ... >= r2 (b > 0)
        const Rational a = lo.coeffs[v];
        const Rational b = -up.coeffs[v];
        Inequality comb{Row(nvars), b * lo.rhs + a * up.rhs};
        for (std::size_t j = 0; j < nvars; ++j) comb.coeffs[j] = b * lo.coeffs[j] + a * up.coeffs[j];
        comb.coeffs[v] = 0;
        next.push_back(std::move(comb));
      }
    }
    levels[v] = std::move(next);
  }
  for (const auto& ineq : levels[0])
    if (ineq.rhs > 0) return std::nullopt;

  Row t(nvars, Rational(0));
  for (std::size_t v = 0; v < nvars; ++v) {
    std::optional<Rational> lo, up;
    for (const auto& ineq : levels[v + 1]) {
      if (ineq.coeffs[v] == 0) continue;
      Rational rest = ineq.rhs;
      for (std::size_t j = 0; j < v; ++j) rest -= ineq.coeffs[j] * t[j];
      const Rational bound = rest / ineq.coeffs[v];
      if (ineq.coeffs[v] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else if (!up || bound < *up) {
        up = bound;
      }
    }
    if (lo) t[v] = *lo;
    else if (up) t[v] = *up;
  }
  return t;
}

}  // namespace

std::optional<DegreesWeights> find_weights(std::span<const Polynomial> f) {
  if (f.empty()) throw std::invalid_argument("find_weights needs at least one polynomial");
  const std::size_t n = f.front().nvars();
  std::vector<Row> rows;
  for (const auto& fi : f) {
    if (fi.is_zero()) throw std::invalid_argument("find_weights needs nonzero polynomials");
    if (fi.nvars() != n || !same_ring(fi.ring(), f.front().ring()))
      throw std::invalid_argument("polynomials live over different variable sets");
    const Monomial& base = fi.terms().begin()->first;
    for (const auto& [m, c] : fi.terms()) {
      Row r(n);
      bool nonzero = false;
      for (std::size_t j = 0; j < n; ++j) {
        r[j] = m[j] - base[j];
        nonzero = nonzero || r[j] != 0;
      }
      if (nonzero) rows.push_back(std::move(r));
    }
  }
  const auto pivots = rref(rows, n);
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0, p = 0; c < n; ++c) {
    if (p < pivots.size() && pivots[p] == c) ++p;
    else free_cols.push_back(c);
  }
  if (free_cols.empty()) return std::nullopt;

  // Null-space basis: one vector per free column.
  std::vector<Row> basis;
  for (std::size_t fc : free_cols) {
    Row v(n, Rational(0));
    v[fc] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][fc];
    basis.push_back(std::move(v));
  }
  auto combine = [&](const Row& t) {
    Row a(n, Rational(0));
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t j = 0; j < n; ++j) a[j] += t[k] * basis[k][j];
    return a;
  };

  Row a = combine(Row(basis.size(), Rational(1)));
  if (!std::all_of(a.begin(), a.end(), [](const Rational& x) { return x > 0; })) {
    std::vector<Inequality> system;
    for (std::size_t j = 0; j < n; ++j) {
      Inequality ineq{Row(basis.size()), Rational(1)};
      for (std::size_t k = 0; k < basis.size(); ++k) ineq.coeffs[k] = basis[k][j];
      system.push_back(std::move(ineq));
    }
    const auto t = solve_inequalities(std::move(system), basis.size());
    if (!t) return std::nullopt;
    a = combine(*t);
  }
  const Rational lowest = *std::min_element(a.begin(), a.end());
  for (auto& x : a) x /= lowest;

  WeightSystem weights(a);
  std::vector<Rational> degrees;
  for (const auto& fi : f) {
    Rational d = weights.degree(fi.terms().begin()->first);
    if (d <= 0) return std::nullopt;
    degrees.push_back(d);
  }
  return DegreesWeights(std::move(degrees), std::move(weights));
}

}  // namespace singkit::poly
