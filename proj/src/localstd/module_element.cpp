#include "singkit/localstd/module_element.hpp"

#include <algorithm>
#include <stdexcept>

namespace singkit::localstd {

ModuleElement::ModuleElement(std::vector<poly::Polynomial> components) : c_(std::move(components)) {
  if (c_.empty()) throw std::invalid_argument("module element needs rank >= 1");
  for (const auto& p : c_)
    if (!poly::same_ring(p.ring(), c_.front().ring()))
      throw std::invalid_argument("module components live over different variable sets");
}

ModuleElement ModuleElement::embed(const poly::Polynomial& p, std::size_t rank, std::size_t index) {
  if (index >= rank) throw std::invalid_argument("component index out of range");
  std::vector<poly::Polynomial> c(rank, poly::Polynomial(p.ring()));
  c[index] = p;
  return ModuleElement(std::move(c));
}

ModuleElement ModuleElement::zero(const poly::Ring& ring, std::size_t rank) {
  return ModuleElement(std::vector<poly::Polynomial>(rank, poly::Polynomial(ring)));
}

bool ModuleElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const auto& p) { return p.is_zero(); });
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<poly::Polynomial> r(c_);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
  return ModuleElement(std::move(r));
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<poly::Polynomial> r(c_);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
  return ModuleElement(std::move(r));
}

ModuleElement ModuleElement::operator*(const poly::Polynomial& s) const {
  std::vector<poly::Polynomial> r;
  for (const auto& p : c_) r.push_back(p * s);
  return ModuleElement(std::move(r));
}

std::string ModuleElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) out += (i ? ", " : "") + c_[i].to_string();
  return out + ")";
}

std::string to_string(const StandardMonomial& m, const poly::VariableSet& vars) {
  const std::string e = "e" + std::to_string(m.component + 1);
  return m.monomial.is_one() ? e : poly::to_string(m.monomial, vars) + "*" + e;
}

}  // namespace singkit::localstd
