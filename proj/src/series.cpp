#include "etalab/series.hpp"

#include <sstream>
#include <stdexcept>

#include "etalab/errors.hpp"

namespace etalab {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(long c) { return IntPoly({Integer(c)}); }

IntPoly IntPoly::monomial(long c, int degree) {
  std::vector<Integer> v(degree + 1, 0);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPoly::at_one() const {
  Integer s = 0;
  for (const auto& a : c_) s += a;
  return s;
}

std::optional<int> IntPoly::vanishing_order_at_one() const {
  if (is_zero()) return std::nullopt;
  int m = 0;
  IntPoly p = *this;
  while (p.at_one() == 0) {
    p = p.divide_one_minus_t();
    ++m;
  }
  return m;
}

IntPoly IntPoly::divide_one_minus_t() const {
  if (at_one() != 0) throw std::logic_error("polynomial does not vanish at t = 1");
  // p = (1-t) q  <=>  q_k = p_0 + ... + p_k
  std::vector<Integer> q;
  Integer run = 0;
  for (int k = 0; k + 1 < static_cast<int>(c_.size()); ++k) {
    run += c_[k];
    q.push_back(run);
  }
  return IntPoly(std::move(q));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Integer> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  std::vector<Integer> r = c_;
  for (auto& a : r) a = -a;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Integer> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t a = 0; a < c_.size(); ++a)
    for (std::size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
  return IntPoly(std::move(r));
}

namespace {

template <class C>
std::string render(const std::vector<C>& c, const std::string& var, auto&& str) {
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    C mag = c[k] < 0 ? C(-c[k]) : c[k];
    if (first)
      out << (c[k] < 0 ? "-" : "");
    else
      out << (c[k] < 0 ? " - " : " + ");
    first = false;
    const bool unit = mag == 1;
    if (k == 0 || !unit) out << str(mag);
    if (k == 0) continue;
    if (!unit) out << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

}  // namespace

std::string IntPoly::to_string(const std::string& var) const {
  return render(c_, var, [](const Integer& a) { return a.get_str(); });
}

std::vector<Integer> series_mul(const std::vector<Integer>& a, const std::vector<Integer>& b, int n) {
  std::vector<Integer> r(n + 1, 0);
  for (int i = 0; i <= n && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n && j < static_cast<int>(b.size()); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

std::vector<Integer> series_inverse(const IntPoly& p, int n) {
  const Integer p0 = p[0];
  if (p0 != 1 && p0 != -1) throw std::invalid_argument("series_inverse: constant term must be a unit");
  std::vector<Integer> r(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    Integer s = k == 0 ? Integer(1) : Integer(0);
    for (int i = 1; i <= k && i <= p.degree(); ++i) s -= p[i] * r[k - i];
    r[k] = s * p0;
  }
  return r;
}

IntPoly one_minus_t_pow(int m) {
  IntPoly r = IntPoly::constant(1);
  const IntPoly f({Integer(1), Integer(-1)});
  for (int k = 0; k < m; ++k) r = r * f;
  return r;
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] -= o.c_[k];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> result(n, Rational(0));
  for (std::size_t a = 0; a < n; ++a) {
    // Lagrange basis polynomial for node a
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[b];
      }
      basis = std::move(next);
      denom *= xs[a] - xs[b];
    }
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] += basis[k] * ys[a] / denom;
  }
  for (auto& r : result) r.canonicalize();
  return RatPoly(std::move(result));
}

std::string RatPoly::to_string(const std::string& var) const {
  return render(c_, var, [](const Rational& a) { return rational_string(a); });
}

RatPoly finite_difference(const RatPoly& q, int m) {
  RatPoly p = q;
  for (int step = 0; step < m; ++step) {
    // p(j-1) = sum_k c_k (j-1)^k, expanded binomially
    const auto& c = p.coeffs();
    std::vector<Rational> shifted(c.size(), Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      Integer binom = 1;
      for (std::size_t i = 0; i <= k; ++i) {
        // term C(k,i) j^i (-1)^{k-i}
        Rational term = c[k] * Rational(binom);
        if ((k - i) % 2) term = -term;
        shifted[i] += term;
        binom = binom * Integer(k - i) / Integer(i + 1);
      }
    }
    p = p - RatPoly(std::move(shifted));
  }
  return p;
}

std::string rational_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

IntPoly multiplicity_polynomial(const std::vector<int>& relation_degrees) {
  IntPoly e = IntPoly::constant(1);
  for (int d : relation_degrees) e = e * IntPoly(std::vector<Integer>(d, Integer(1)));
  return e;
}

std::vector<IntPoly> symmetric_functions(const std::vector<int>& relation_degrees) {
  // prod_l (1 + t^{d_l} x), read off coefficients of x^k
  std::vector<IntPoly> s{IntPoly::constant(1)};
  for (int d : relation_degrees) {
    std::vector<IntPoly> next(s.size() + 1);
    for (std::size_t k = 0; k < s.size(); ++k) {
      next[k] = next[k] + s[k];
      next[k + 1] = next[k + 1] + s[k] * IntPoly::monomial(1, d);
    }
    s = std::move(next);
  }
  return s;
}

std::vector<Integer> HilbertSeries::expand(int n) const {
  std::vector<Integer> num(n + 1, 0);
  for (int k = 0; k <= n && k <= numerator.degree(); ++k) num[k] = numerator[k];
  for (int p = 0; p < pole_order; ++p)
    for (int k = 1; k <= n; ++k) num[k] += num[k - 1];
  return num;
}

HilbertSeries rational_form(std::vector<Integer> coeffs, int max_pole, int margin) {
  const int D = static_cast<int>(coeffs.size()) - 1;
  std::vector<Integer> cur = coeffs;
  for (int m = 0; m <= max_pole; ++m) {
    bool tail_zero = D + 1 > margin;
    for (int k = std::max(0, D - margin + 1); k <= D && tail_zero; ++k) tail_zero = cur[k] == 0;
    if (tail_zero) {
      HilbertSeries h;
      h.coeffs = std::move(coeffs);
      h.numerator = IntPoly(cur);
      h.pole_order = m;
      return h;
    }
    for (int k = D; k >= 1; --k) cur[k] -= cur[k - 1];
  }
  throw NotPolynomialWithinBound("Hilbert series has no rational form with pole order <= " +
                                 std::to_string(max_pole) + " visible through degree " + std::to_string(D) +
                                 "; raise D");
}

}  // namespace etalab
