#include "etalab/parse.hpp"

#include <cctype>

#include "etalab/errors.hpp"

namespace etalab {
namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := atom ['^' integer]
// atom   := integer ['/' integer] | identifier | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars, int line, int column)
      : text_(text), vars_(vars), line_(line), column_(column) {}

  RationalPolynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    RationalPolynomial p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  RationalPolynomial expr() {
    skip_space();
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    RationalPolynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalPolynomial term() {
    RationalPolynomial acc = factor();
    for (;;) {
      skip_space();
      if (!peek('*')) return acc;
      ++pos_;
      acc = acc * factor();
    }
  }

  RationalPolynomial factor() {
    RationalPolynomial base = atom();
    skip_space();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected exponent after '^'");
    Integer e = integer();
    if (e > 1000) fail("exponent too large");
    RationalPolynomial r = RationalPolynomial::constant(RationalField{}, 1);
    for (long k = 0; k < e.get_si(); ++k) r = r * base;
    return r;
  }

  RationalPolynomial atom() {
    skip_space();
    if (at_end()) fail("unexpected end of polynomial");
    char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Rational q(integer());
      skip_space();
      if (peek('/')) {
        ++pos_;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected denominator");
        std::size_t at = pos_;
        Integer den = integer();
        if (den == 0) fail_at(at, "zero denominator");
        q /= den;
      }
      return RationalPolynomial::constant(RationalField{}, q);
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return RationalPolynomial::variable(RationalField{}, static_cast<int>(i));
      throw UnknownVariable(line_, column_ + static_cast<int>(start), name);
    }
    if (ch == '(') {
      ++pos_;
      RationalPolynomial inner = expr();
      skip_space();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  Integer integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  bool peek(char c) const { return !at_end() && text_[pos_] == c; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw ParseError(line_, column_ + static_cast<int>(at), msg);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  int line_;
  int column_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalPolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                                    int line, int column) {
  return PolyParser(text, vars, line, column).parse();
}

}  // namespace etalab
