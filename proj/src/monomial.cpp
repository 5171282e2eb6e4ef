#include "etalab/monomial.hpp"

#include <limits>
#include <stdexcept>

namespace etalab {

Monomial::Monomial(const std::vector<int>& exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVariables))
    throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVariables) + ")");
  exps_.fill(0);
  for (std::size_t i = 0; i < exponents.size(); ++i) set(static_cast<int>(i), exponents[i]);
}

Monomial Monomial::variable(int index) {
  Monomial m;
  m.set(index, 1);
  return m;
}

void Monomial::set(int i, int e) {
  if (i < 0 || i >= kMaxVariables) throw std::out_of_range("variable index out of range");
  if (e < 0 || e > std::numeric_limits<std::uint16_t>::max())
    throw std::out_of_range("exponent out of range");
  exps_[i] = static_cast<std::uint16_t>(e);
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kMaxVariables; ++i) m.set(i, exps_[i] + other.exps_[i]);
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kMaxVariables; ++i) m.set(i, exps_[i] - other.exps_[i]);
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (int i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (int i = 0; i < kMaxVariables; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

namespace {

void fill(int v, int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == v - 1) {
    cur.set(var, remaining);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set(var, e);
    fill(v, var + 1, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomial_basis(int v, int d) {
  if (v < 1 || v > kMaxVariables) throw std::invalid_argument("variable count out of range");
  std::vector<Monomial> out;
  if (d < 0) return out;
  out.reserve(monomial_count(v, d));
  Monomial cur;
  fill(v, 0, d, cur, out);
  return out;
}

std::size_t monomial_count(int v, int d) {
  if (d < 0) return 0;
  // C(d+v-1, v-1) computed incrementally; exact at every step
  std::size_t r = 1;
  for (int k = 1; k <= v - 1; ++k) r = r * static_cast<std::size_t>(d + k) / static_cast<std::size_t>(k);
  return r;
}

MonomialIndex::MonomialIndex(const std::vector<Monomial>& monomials) {
  map_.reserve(monomials.size());
  for (std::size_t i = 0; i < monomials.size(); ++i) map_.emplace(monomials[i], static_cast<int>(i));
}

}  // namespace etalab
