#include "etalab/field.hpp"

#include <charconv>

namespace etalab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (p <= 2 || !is_prime(p) || p >= (1u << 31))
    throw std::invalid_argument("prime field needs an odd prime below 2^31, got " +
                                std::to_string(p));
  FieldSpec s;
  s.kind = Kind::PrimeField;
  s.prime = p;
  return s;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text == "Fp") return prime_field();
  if (text.rfind("Fp:", 0) == 0) {
    std::uint32_t p = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last || first == last)
      throw std::invalid_argument("bad prime in field spec '" + text + "'");
    return prime_field(p);
  }
  throw std::invalid_argument("unknown field '" + text + "' (expected Q or Fp:<p>)");
}

std::string FieldSpec::name() const {
  return kind == Kind::Rationals ? "Q" : "Fp:" + std::to_string(prime);
}

PrimeField::PrimeField(std::uint32_t p) : p_(FieldSpec::prime_field(p).prime) {}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

PrimeField::Element PrimeField::from_int(long v) const {
  long m = v % static_cast<long>(p_);
  if (m < 0) m += p_;
  return static_cast<Element>(m);
}

PrimeField::Element PrimeField::from_integer(const Integer& z) const {
  Integer m = z % p_;
  if (m < 0) m += p_;
  return static_cast<Element>(m.get_ui());
}

PrimeField::Element PrimeField::from_rational(const Rational& q) const {
  Element den = from_integer(q.get_den());
  if (den == 0)
    throw std::domain_error("denominator " + q.get_den().get_str() +
                            " vanishes modulo " + std::to_string(p_));
  return mul(from_integer(q.get_num()), inv(den));
}

}  // namespace etalab
