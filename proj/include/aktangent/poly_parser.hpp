#pragma once

// Grammar (whitespace-insensitive):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*')? unary)*          juxtaposition multiplies: 2x^2y
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := number | 'x' | 'y' | '(' expr ')'
//   number  := digits ('/' digits)?            a rational literal such as 3/4

#include "aktangent/bivarpoly.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace aktangent {

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
  }

  BivarPoly parse() {
    if (src_.empty()) fail("empty expression");
    BivarPoly p = expr();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

 private:
  BivarPoly expr() {
    BivarPoly acc = term();
    while (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
      const char op = src_[pos_++];
      BivarPoly rhs = term();
      if (op == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
    return acc;
  }

  BivarPoly term() {
    BivarPoly acc = unary();
    while (pos_ < src_.size()) {
      if (src_[pos_] == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (starts_primary()) {
        acc = acc * unary();
      } else {
        break;
      }
    }
    return acc;
  }

  BivarPoly unary() {
    if (pos_ < src_.size() && src_[pos_] == '-') {
      ++pos_;
      return -unary();
    }
    if (pos_ < src_.size() && src_[pos_] == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  BivarPoly power() {
    BivarPoly base = primary();
    if (pos_ < src_.size() && src_[pos_] == '^') {
      ++pos_;
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected a non-negative integer exponent");
      if (digits.size() > 4) fail("exponent too large");
      return pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  BivarPoly primary() {
    if (pos_ >= src_.size()) fail("unexpected end of expression");
    const char ch = src_[pos_];
    if (ch == 'x' || ch == 'X') {
      ++pos_;
      return BivarPoly::x();
    }
    if (ch == 'y' || ch == 'Y') {
      ++pos_;
      return BivarPoly::y();
    }
    if (ch == '(') {
      ++pos_;
      BivarPoly inner = expr();
      if (pos_ >= src_.size() || src_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num = read_digits();
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        const std::string den = read_digits();
        if (den.empty()) fail("expected a denominator after '/'");
        num += "/" + den;
      }
      try {
        return BivarPoly(parse_rational(num));
      } catch (const ParseError& e) {
        fail(e.what());
      }
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  bool starts_primary() const {
    const char ch = src_[pos_];
    return ch == 'x' || ch == 'X' || ch == 'y' || ch == 'Y' || ch == '(' ||
           std::isdigit(static_cast<unsigned char>(ch));
  }

  std::string read_digits() {
    std::string out;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) out.push_back(src_[pos_++]);
    return out;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial expression: " + msg + " at position " + std::to_string(pos_));
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline BivarPoly parse_bivar_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

/// Parses "<x>,<y>" with rational coordinates.
inline std::pair<BigRational, BigRational> parse_point(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("point must be written as <x>,<y>");
  return {parse_rational(std::string_view(s).substr(0, comma)),
          parse_rational(std::string_view(s).substr(comma + 1))};
}

}  // namespace aktangent
