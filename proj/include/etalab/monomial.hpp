#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace etalab {

/// Hard cap on the number of ring variables.
inline constexpr int kMaxVariables = 12;

/// Exponent vector of a monomial in at most kMaxVariables standard-graded
/// variables. Unused trailing slots stay zero.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  explicit Monomial(const std::vector<int>& exponents);

  static Monomial variable(int index);

  int operator[](int i) const { return exps_[i]; }
  void set(int i, int e);
  int degree() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// other must divide *this.
  Monomial operator/(const Monomial& other) const;

  std::size_t hash() const;

  /// Renders as "x^2*y" using the given names; the empty product is "1".
  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::array<std::uint16_t, kMaxVariables> exps_;
};

/// Graded-lexicographic order with x_0 > x_1 > ... ; true when a is larger.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of degree d in v variables, largest first in grlex.
std::vector<Monomial> monomial_basis(int v, int d);

/// Number of monomials of degree d in v variables, C(d+v-1, v-1).
std::size_t monomial_count(int v, int d);

/// Position lookup for a fixed list of monomials.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(const std::vector<Monomial>& monomials);

  /// -1 when absent.
  int find(const Monomial& m) const {
    auto it = map_.find(m);
    return it == map_.end() ? -1 : it->second;
  }

 private:
  std::unordered_map<Monomial, int, MonomialHash> map_;
};

}  // namespace etalab
