#include "singkit/poly/univariate.hpp"

#include <stdexcept>

namespace singkit::poly {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_polynomial(const Polynomial& p, std::size_t var) {
  std::vector<Rational> v(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != var && m[j] != 0) throw std::invalid_argument("polynomial is not univariate in the chosen variable");
    v[static_cast<std::size_t>(m[var])] = c;
  }
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o * Rational(-1); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rational& s) const {
  std::vector<Rational> v(c_);
  for (auto& x : v) x *= s;
  return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  std::vector<Rational> rem(c_);
  const int dd = divisor.degree();
  if (degree() < dd) return {UniPoly(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1, Rational(0));
  for (int k = degree(); k >= dd; --k) {
    const Rational q = rem[static_cast<std::size_t>(k)] / divisor.leading();
    quot[static_cast<std::size_t>(k - dd)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= q * divisor.c_[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / leading());
}

Rational UniPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
  auto ring = make_ring(std::vector<std::string>{var});
  Polynomial p(ring);
  for (std::size_t i = 0; i < c_.size(); ++i)
    p += Polynomial(ring, Monomial(std::vector<int>{static_cast<int>(i)}), c_[i]);
  return p.to_string();
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return p.divmod(gcd(p, p.derivative())).first.monic();
}

}  // namespace singkit::poly
