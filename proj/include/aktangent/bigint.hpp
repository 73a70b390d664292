#pragma once

// Exact scalars: every count and every coefficient in the library lives in
// one of these two types. Both are GMP-backed Boost.Multiprecision numbers.

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aktangent {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

/// A caller violated a documented precondition.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input data (a table, a cache, a parsed expression) is malformed or
/// internally inconsistent.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Text could not be parsed under the relevant grammar.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Product of C(a_k, b_k) over the union of supports; zero as soon as some
/// b_k exceeds a_k. Missing entries are zero.
inline BigInt seq_binomial(const std::vector<int>& a, const std::vector<int>& b) {
  BigInt r = 1;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    const int ak = k < a.size() ? a[k] : 0;
    const int bk = k < b.size() ? b[k] : 0;
    if (ak < 0 || bk < 0) throw PreconditionError("seq_binomial: negative entry");
    if (bk > ak) return 0;
    r *= binomial(ak, bk);
  }
  return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const BigRational& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

/// Parses an optionally signed decimal integer; no whitespace, no separators.
inline BigInt parse_bigint(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw ParseError("expected an integer, got '" + std::string(s) + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw ParseError("expected an integer, got '" + std::string(s) + "'");
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return BigInt(digits);
}

/// Parses `p` or `p/q` with integer p, q (q != 0).
inline BigRational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_bigint(s));
  BigInt num = parse_bigint(s.substr(0, slash));
  BigInt den = parse_bigint(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  return BigRational(num, den);
}

}  // namespace aktangent
