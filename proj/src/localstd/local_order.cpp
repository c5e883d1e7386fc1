#include "singkit/localstd/local_order.hpp"

#include <stdexcept>

namespace singkit::localstd {

LocalOrder::LocalOrder(std::vector<long> weights, std::vector<long> shifts)
    : weights_(std::move(weights)), shifts_(std::move(shifts)) {
  if (shifts_.empty()) throw std::invalid_argument("local order needs rank >= 1");
  for (long w : weights_)
    if (w <= 0) throw std::invalid_argument("local order weights must be positive");
}

LocalOrder LocalOrder::anti_graded(std::size_t nvars, std::size_t rank) {
  return LocalOrder(std::vector<long>(nvars, 1), std::vector<long>(rank, 0));
}

LocalOrder LocalOrder::weighted(const poly::DegreesWeights& dw) {
  Integer scale = 1;
  auto absorb = [&scale](const Rational& q) { mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den().get_mpz_t()); };
  for (const auto& a : dw.weights.values()) absorb(a);
  for (const auto& d : dw.degrees) absorb(d);
  auto to_long = [&scale](const Rational& q) {
    Rational s = q * scale;
    if (!s.get_num().fits_slong_p()) throw std::overflow_error("weights too large for a local order");
    return s.get_num().get_si();
  };
  std::vector<long> w, sh;
  for (const auto& a : dw.weights.values()) w.push_back(to_long(a));
  for (const auto& d : dw.degrees) sh.push_back(-to_long(d));
  return LocalOrder(std::move(w), std::move(sh));
}

long LocalOrder::degree(const poly::Monomial& m) const {
  long d = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) d += weights_[i] * m[i];
  return d;
}

int LocalOrder::compare(const poly::Monomial& a, std::size_t ca, const poly::Monomial& b, std::size_t cb) const {
  const long da = degree(a, ca);
  const long db = degree(b, cb);
  if (da != db) return da < db ? 1 : -1;
  if (ca != cb) return ca > cb ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

std::string LocalOrder::describe() const {
  std::string out = "local weighted order, weights (";
  for (std::size_t i = 0; i < weights_.size(); ++i) out += (i ? "," : "") + std::to_string(weights_[i]);
  out += "), shifts (";
  for (std::size_t i = 0; i < shifts_.size(); ++i) out += (i ? "," : "") + std::to_string(shifts_[i]);
  return out + ")";
}

}  // namespace singkit::localstd
