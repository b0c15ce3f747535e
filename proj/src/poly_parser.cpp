#include "lacunary/poly_parser.hpp"

#include <cctype>
#include <string>

#include "lacunary/errors.hpp"

namespace lacunary {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  SparsePoly parse() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      terms.push_back(term(sign));
      first = false;
      skip_space();
    }
    return SparsePoly::normalize(std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool is_var(char c) const { return c == 'x' || c == 'X'; }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected a number", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }

  Term term(int sign) {
    Rational coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(digits());
      Integer den = 1;
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        den = Integer(digits());
        if (den == 0) throw ParseError("zero denominator", at);
        skip_space();
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      has_coeff = true;
    }
    Integer exponent = 0;
    if (peek() == '*') {
      if (!has_coeff) throw ParseError("'*' without a coefficient", pos_);
      ++pos_;
      skip_space();
      if (!is_var(peek())) throw ParseError("expected 'x' after '*'", pos_);
    }
    if (is_var(peek())) {
      ++pos_;
      exponent = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        exponent = Integer(digits());
        skip_space();
      }
    } else if (!has_coeff) {
      throw ParseError("expected a term", pos_);
    }
    if (sign < 0) coeff = -coeff;
    return Term{std::move(exponent), std::move(coeff)};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text) { return Parser(text).parse(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw ParseError("empty number", 0);
  bool negative = s[0] == '-';
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  auto all_digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  };
  Rational r;
  const std::size_t slash = s.find('/');
  const std::size_t dot = s.find('.');
  if (slash != std::string::npos) {
    if (!all_digits(i, slash)) throw ParseError("bad numerator", i);
    if (!all_digits(slash + 1, s.size())) throw ParseError("bad denominator", slash + 1);
    Integer den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator", slash + 1);
    r = Rational(Integer(s.substr(i, slash - i)), den);
  } else if (dot != std::string::npos) {
    const bool int_ok = dot == i || all_digits(i, dot);
    if (!int_ok || !all_digits(dot + 1, s.size())) throw ParseError("bad decimal", i);
    std::string digits = s.substr(i, dot - i) + s.substr(dot + 1);
    Integer den = 1;
    for (std::size_t k = dot + 1; k < s.size(); ++k) den *= 10;
    r = Rational(Integer(digits), den);
  } else {
    if (!all_digits(i, s.size())) throw ParseError("bad integer", i);
    r = Rational(Integer(s.substr(i)));
  }
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace lacunary
