#pragma once

#include "aktangent/bigint.hpp"

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace aktangent {

/// Dense univariate polynomial with coefficients in a commutative ring T,
/// stored in ascending exponent order. The zero polynomial has no stored
/// coefficients and degree -1; otherwise the last coefficient is nonzero.
///
/// T may itself be a UniPoly, which is how parameter-dependent polynomials
/// (a polynomial in s whose coefficients are polynomials in t) are modelled.
template <class T>
class UniPoly {
 public:
  using coefficient_type = T;

  UniPoly() = default;
  UniPoly(const T& c) {  // NOLINT(google-explicit-constructor)
    if (!(c == T(0))) coeffs_.push_back(c);
  }
  template <std::integral I>
  UniPoly(I c) : UniPoly(T(c)) {}  // NOLINT(google-explicit-constructor)
  UniPoly(std::initializer_list<T> cs) : coeffs_(cs) { trim(); }
  explicit UniPoly(std::vector<T> cs) : coeffs_(std::move(cs)) { trim(); }

  static UniPoly monomial(const T& c, std::size_t exponent) {
    std::vector<T> cs(exponent + 1, T(0));
    cs[exponent] = c;
    return UniPoly(std::move(cs));
  }
  static UniPoly variable() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<T>& coefficients() const { return coeffs_; }

  /// Coefficient of x^i; zero beyond the degree.
  T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  const T& leading() const {
    if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  /// Smallest exponent with a nonzero coefficient; -1 for the zero polynomial.
  int order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!(coeffs_[i] == T(0))) return static_cast<int>(i);
    return -1;
  }

  template <class U>
  U operator()(const U& x) const {
    U acc = U(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> cs(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = coeffs_[i] * T(static_cast<long>(i));
    return UniPoly(std::move(cs));
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a) {
    std::vector<T> cs(a.coeffs_.size());
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = -a.coeffs_[i];
    return UniPoly(std::move(cs));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> cs(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] = cs[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(cs));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
      const T& c = p.coeffs_[static_cast<std::size_t>(i)];
      if (c == T(0)) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      if (i > 0) os << "*t^" << i;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using QPoly = UniPoly<BigRational>;
/// Polynomial in one variable whose coefficients are polynomials in a
/// second (parameter) variable.
using QPolyPoly = UniPoly<QPoly>;

template <class T>
UniPoly<T> pow(const UniPoly<T>& p, unsigned e) {
  UniPoly<T> r(T(1));
  UniPoly<T> b = p;
  while (e) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e) b = b * b;
  }
  return r;
}

// Exact quotient a / b in an integral domain; throws when b does not divide a.
inline BigRational exact_quotient(const BigRational& a, const BigRational& b) {
  if (b == 0) throw PreconditionError("division by zero");
  return a / b;
}

inline BigInt exact_quotient(const BigInt& a, const BigInt& b) {
  if (b == 0) throw PreconditionError("division by zero");
  if (a % b != 0) throw DataError("inexact integer division");
  return a / b;
}

template <class T>
UniPoly<T> exact_quotient(const UniPoly<T>& a, const UniPoly<T>& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw DataError("inexact polynomial division");
  std::vector<T> rem = a.coefficients();
  std::vector<T> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), T(0));
  const std::size_t db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quo.size(); k-- > 0;) {
    const T c = exact_quotient(rem[k + db], b.leading());
    quo[k] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = rem[k + j] - c * b[j];
  }
  for (const T& r : rem)
    if (!(r == T(0))) throw DataError("inexact polynomial division");
  return UniPoly<T>(std::move(quo));
}

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class T>
std::pair<UniPoly<T>, UniPoly<T>> divmod(const UniPoly<T>& a, const UniPoly<T>& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly<T>{}, a};
  std::vector<T> rem = a.coefficients();
  std::vector<T> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), T(0));
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const T inv_lead = T(1) / b.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const T c = rem[k + db] * inv_lead;
    quo[k] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = rem[k + j] - c * b[j];
  }
  rem.resize(db);
  return {UniPoly<T>(std::move(quo)), UniPoly<T>(std::move(rem))};
}

/// Monic greatest common divisor over a field (zero if both inputs are zero).
template <class T>
UniPoly<T> gcd(UniPoly<T> a, UniPoly<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const T inv = T(1) / a.leading();
  std::vector<T> cs = a.coefficients();
  for (T& c : cs) c = c * inv;
  return UniPoly<T>(std::move(cs));
}

/// Squarefree over a field of characteristic zero: gcd(p, p') is constant.
template <class T>
bool is_squarefree(const UniPoly<T>& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

template <class T>
std::string to_string(const UniPoly<T>& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace aktangent
