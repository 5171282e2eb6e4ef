#pragma once

// Exact univariate polynomial and power-series arithmetic used by the
// invariants: integer polynomials in t (Hilbert series numerators,
// symmetric functions in t^{d_l}) and rational polynomials in j (the even
// and odd length polynomials).

#include <optional>
#include <string>
#include <vector>

#include "etalab/field.hpp"

namespace etalab {

/// Integer polynomial in t, coefficient k at index k, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  static IntPoly constant(long c);
  static IntPoly monomial(long c, int degree);

  const std::vector<Integer>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Integer operator[](int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Integer(0); }
  Integer at_one() const;
  /// Largest m with (1-t)^m dividing this; nullopt for the zero polynomial.
  std::optional<int> vanishing_order_at_one() const;
  /// Exact quotient by (1-t); requires value 0 at t = 1.
  IntPoly divide_one_minus_t() const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// "1 + 2*t + t^2" style rendering.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// Power series truncated at degree n (coefficients 0..n).
std::vector<Integer> series_mul(const std::vector<Integer>& a, const std::vector<Integer>& b, int n);
/// 1/p as a power series through degree n; p must have constant term +-1.
std::vector<Integer> series_inverse(const IntPoly& p, int n);
/// (1-t)^m as a polynomial.
IntPoly one_minus_t_pow(int m);

/// Rational polynomial in one variable j, coefficient k at index k.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational operator()(const Rational& x) const;
  RatPoly operator-(const RatPoly& o) const;
  friend bool operator==(const RatPoly&, const RatPoly&) = default;
  /// Exact interpolation through (x_k, y_k) with distinct x_k.
  static RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);
  std::string to_string(const std::string& var = "j") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// q^{(1)}(j) = q(j) - q(j-1), iterated m times.
RatPoly finite_difference(const RatPoly& q, int m);

std::string rational_string(const Rational& r);

/// e_R(t) = prod_l (1 + t + ... + t^{d_l - 1}).
IntPoly multiplicity_polynomial(const std::vector<int>& relation_degrees);

/// s_0, ..., s_c: elementary symmetric functions in t^{d_1}, ..., t^{d_c}.
std::vector<IntPoly> symmetric_functions(const std::vector<int>& relation_degrees);

/// H_T(t) = e_T(t) / (1-t)^pole_order with coefficients known through degree D.
struct HilbertSeries {
  std::vector<Integer> coeffs;  // degrees 0..D
  IntPoly numerator;
  int pole_order = 0;

  /// Expansion of the rational form through degree n.
  std::vector<Integer> expand(int n) const;
};

/// Recovers the rational form of a dimension sequence by multiplying by
/// (1-t) until the result vanishes on the trailing `margin` degrees. Tries
/// pole orders 0..max_pole. Throws NotPolynomialWithinBound.
HilbertSeries rational_form(std::vector<Integer> coeffs, int max_pole, int margin);

}  // namespace etalab
