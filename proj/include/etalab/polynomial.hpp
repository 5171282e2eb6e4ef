#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "etalab/field.hpp"
#include "etalab/monomial.hpp"

namespace etalab {

/// Sparse polynomial over F. Terms are kept in strictly decreasing grlex order
/// with no zero coefficients, so equality is structural.
template <class F>
class Polynomial {
 public:
  using Element = typename F::Element;
  struct Term {
    Monomial mono;
    Element coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Polynomial(F field = F()) : field_(std::move(field)) {}

  static Polynomial constant(F field, Element c) {
    return monomial(std::move(field), Monomial(), std::move(c));
  }
  static Polynomial monomial(F field, const Monomial& m, Element c) {
    Polynomial p(std::move(field));
    if (!p.field_.is_zero(c)) p.terms_.push_back({m, std::move(c)});
    return p;
  }
  static Polynomial variable(F field, int index) {
    Element one = field.one();
    return monomial(std::move(field), Monomial::variable(index), one);
  }
  /// Builds from arbitrary terms; merges duplicates and drops zeros.
  static Polynomial from_terms(F field, std::vector<Term> terms) {
    Polynomial p(std::move(field));
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = p.field_.add(p.terms_.back().coeff, t.coeff);
        if (p.field_.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      } else if (!p.field_.is_zero(t.coeff)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const F& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Degree of the leading term; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.mono.degree() == degree(); });
  }

  /// Constant term (zero when absent).
  Element constant_term() const {
    if (!terms_.empty() && terms_.back().mono.degree() == 0) return terms_.back().coeff;
    return field_.zero();
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::map<Monomial, Element, GrlexGreater> acc;
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        auto prod = a.field_.mul(s.coeff, t.coeff);
        auto [it, fresh] = acc.try_emplace(s.mono * t.mono, prod);
        if (!fresh) it->second = a.field_.add(it->second, prod);
      }
    Polynomial r(a.field_);
    for (auto& [m, c] : acc)
      if (!a.field_.is_zero(c)) r.terms_.push_back({m, c});
    return r;
  }

  Polynomial scaled(const Element& s) const {
    Polynomial r(field_);
    if (field_.is_zero(s)) return r;
    for (const auto& t : terms_) r.terms_.push_back({t.mono, field_.mul(t.coeff, s)});
    return r;
  }

  Polynomial times_monomial(const Monomial& m) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
  }

  /// Formal partial derivative with respect to variable var.
  Polynomial derivative(int var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      int e = t.mono[var];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(var, e - 1);
      out.push_back({m, field_.mul(t.coeff, field_.from_int(e))});
    }
    return from_terms(field_, std::move(out));
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
      std::string c = field_.to_string(t.coeff);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (out.empty()) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      bool is_const = t.mono.degree() == 0;
      if (is_const) {
        out += c;
      } else {
        if (c != "1") out += c + '*';
        out += t.mono.to_string(names);
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial r(a.field_);
    const auto& fld = a.field_;
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && grlex_greater(a.terms_[i].mono, b.terms_[j].mono))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || grlex_greater(b.terms_[j].mono, a.terms_[i].mono)) {
        r.terms_.push_back({b.terms_[j].mono, subtract ? fld.neg(b.terms_[j].coeff) : b.terms_[j].coeff});
        ++j;
      } else {
        auto c = subtract ? fld.sub(a.terms_[i].coeff, b.terms_[j].coeff)
                          : fld.add(a.terms_[i].coeff, b.terms_[j].coeff);
        if (!fld.is_zero(c)) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  F field_;
  std::vector<Term> terms_;
};

using RationalPolynomial = Polynomial<RationalField>;

/// Maps a rational polynomial into another field (reducing coefficients mod p).
template <class G>
Polynomial<G> to_field(const RationalPolynomial& p, const G& field) {
  std::vector<typename Polynomial<G>::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono, field.from_rational(t.coeff)});
  return Polynomial<G>::from_terms(field, std::move(terms));
}

}  // namespace etalab
