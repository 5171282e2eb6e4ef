#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace etalab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Which coefficient field a computation runs over.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t prime = 0;

  static constexpr std::uint32_t kDefaultPrime = 32003;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime_field(std::uint32_t p = kDefaultPrime);

  /// Parses "Q" or "Fp:<p>" (also accepts "QQ" and "Fp" for the default prime).
  static FieldSpec parse(const std::string& text);

  bool is_rational() const { return kind == Kind::Rationals; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// The rationals, backed by GMP. Every arithmetic result is canonical
/// (reduced fraction, positive denominator).
class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  /// a -= b * c
  void sub_mul(Element& a, const Element& b, const Element& c) const { a -= b * c; }

  Element from_int(long v) const { return Element(v); }
  Element from_rational(const Rational& q) const { return q; }
  std::string to_string(const Element& a) const { return a.get_str(); }

  FieldSpec spec() const { return FieldSpec::rationals(); }
};

/// Z/p for an odd prime p < 2^31.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p = FieldSpec::kDefaultPrime);

  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const;
  void sub_mul(Element& a, Element b, Element c) const { a = sub(a, mul(b, c)); }

  Element from_int(long v) const;
  Element from_integer(const Integer& z) const;
  /// Throws std::domain_error when p divides the denominator.
  Element from_rational(const Rational& q) const;
  std::string to_string(Element a) const { return std::to_string(a); }

  FieldSpec spec() const { return FieldSpec::prime_field(p_); }

 private:
  std::uint32_t p_;
};

/// Calls fn(RationalField{}) or fn(PrimeField{p}) depending on spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::Rationals) return std::forward<Fn>(fn)(RationalField{});
  return std::forward<Fn>(fn)(PrimeField{spec.prime});
}

}  // namespace etalab
