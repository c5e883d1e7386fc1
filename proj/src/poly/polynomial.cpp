#include "singkit/poly/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

namespace singkit::poly {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_identifier(n)) throw std::invalid_argument("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
  by_name_.resize(names_.size());
  std::iota(by_name_.begin(), by_name_.end(), std::size_t{0});
  std::sort(by_name_.begin(), by_name_.end(),
            [this](std::size_t a, std::size_t b) { return names_[a] < names_[b]; });
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Ring make_ring(std::vector<std::string> names) {
  return std::make_shared<const VariableSet>(std::move(names));
}

Ring make_ring(std::string_view comma_separated) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : comma_separated) {
    if (c == ',') {
      names.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || !names.empty()) names.push_back(cur);
  return make_ring(std::move(names));
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || *a == *b; }

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
}

Monomial Monomial::variable(std::size_t nvars, std::size_t var, int power) {
  Monomial m(nvars);
  m.exps_.at(var) = power;
  return m;
}

int Monomial::total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] -= divisor.exps_[i];
    if (r.exps_[i] < 0) throw std::invalid_argument("monomial division is not exact");
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::with_exponent(std::size_t var, int e) const {
  Monomial r(*this);
  r.exps_.at(var) = e;
  return r;
}

std::string to_string(const Monomial& m, const VariableSet& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial needs a variable context");
}

Polynomial::Polynomial(Ring ring, const Rational& constant) : Polynomial(std::move(ring)) {
  if (constant != 0) terms_.emplace(Monomial(nvars()), constant);
}

Polynomial::Polynomial(Ring ring, Monomial m, const Rational& coefficient)
    : Polynomial(std::move(ring)) {
  if (m.size() != nvars()) throw std::invalid_argument("monomial length differs from variable count");
  if (coefficient != 0) terms_.emplace(std::move(m), coefficient);
}

Polynomial Polynomial::variable(Ring ring, std::string_view name) {
  const auto idx = ring->index_of(name);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *idx);
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  const std::size_t n = ring->size();
  return Polynomial(std::move(ring), Monomial::variable(n, index));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars())); }

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

int Polynomial::order() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.total_degree();
  for (const auto& [m, c] : terms_) d = std::min(d, m.total_degree());
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

bool Polynomial::involves(std::size_t var) const { return degree_in(var) > 0; }

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_)
    if (m.total_degree() == degree) r.terms_.emplace(m, c);
  return r;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_))
    throw std::invalid_argument("polynomials live over different variable sets");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, Rational(-c));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial r(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, Rational(ca * cb));
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::mul_monomial(const Monomial& mono, const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, coeff * c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(ring_, Rational(1));
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars()) throw std::invalid_argument("derivative variable out of range");
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    r.add_term(m.with_exponent(var, m[var] - 1), Rational(c * m[var]));
  }
  return r;
}

Polynomial Polynomial::derivative(std::string_view var) const {
  const auto idx = ring_->index_of(var);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
  return derivative(*idx);
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  check_ring(value);
  const auto coeffs = coefficients_in(var);
  // Horner in the substituted variable.
  Polynomial r(ring_);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    r *= value;
    r += *it;
  }
  return r;
}

Polynomial Polynomial::substitute(std::string_view var, const Polynomial& value) const {
  const auto idx = ring_->index_of(var);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
  return substitute(*idx, value);
}

Polynomial Polynomial::evaluate(std::size_t var, const Rational& value) const {
  if (var >= nvars()) throw std::invalid_argument("evaluation variable out of range");
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_)
    r.add_term(m.with_exponent(var, 0), Rational(c * singkit::pow(value, static_cast<unsigned>(m[var]))));
  return r;
}

Polynomial Polynomial::evaluate(std::string_view var, const Rational& value) const {
  const auto idx = ring_->index_of(var);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
  return evaluate(*idx, value);
}

Polynomial Polynomial::translate(std::span<const Rational> shift) const {
  if (shift.size() != nvars()) throw std::invalid_argument("shift length differs from variable count");
  Polynomial r(*this);
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (shift[i] == 0) continue;
    r = r.substitute(i, variable(ring_, i) + Polynomial(ring_, shift[i]));
  }
  return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  if (var >= nvars()) throw std::invalid_argument("variable out of range");
  std::vector<Polynomial> out(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1,
                              Polynomial(ring_));
  for (const auto& [m, c] : terms_) out[static_cast<std::size_t>(m[var])].add_term(m.with_exponent(var, 0), c);
  return out;
}

Polynomial Polynomial::in_ring(const Ring& target) const {
  std::vector<std::optional<std::size_t>> map(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) map[i] = target->index_of(ring_->name(i));
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e(target->size(), 0);
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!map[i])
        throw std::invalid_argument("variable '" + ring_->name(i) + "' is missing in the target ring");
      e[*map[i]] = m[i];
    }
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

Polynomial Polynomial::divide_by_monomial(const Monomial& mono) const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m / mono, c);
  return r;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial(nvars());
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    std::vector<int> e(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) e[i] = std::min(g[i], m[i]);
    g = Monomial(std::move(e));
  }
  return g;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& [m, c] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sorted_terms().front().second < 0) scale = -scale;
  return *this * scale;
}

std::vector<std::pair<Monomial, Rational>> Polynomial::sorted_terms() const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  const auto& order = ring_->by_name();
  std::sort(out.begin(), out.end(), [&order](const auto& a, const auto& b) {
    const int da = a.first.total_degree();
    const int db = b.first.total_degree();
    if (da != db) return da > db;
    for (std::size_t v : order)
      if (a.first[v] != b.first[v]) return a.first[v] > b.first[v];
    return false;
  });
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += singkit::to_string(mag);
    } else if (mag == 1) {
      out += poly::to_string(m, *ring_);
    } else {
      out += singkit::to_string(mag) + '*' + poly::to_string(m, *ring_);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace singkit::poly
