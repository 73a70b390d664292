#pragma once

#include "aktangent/bigint.hpp"

#include <cstddef>
#include <vector>

namespace aktangent {

/// Power series in one variable known modulo x^(order+1). Coefficients at
/// exponents above `order` are never stored or reported.
class TruncSeries {
 public:
  explicit TruncSeries(int order) : coeffs_(checked(order) + 1, BigRational(0)) {}
  TruncSeries(int order, const std::vector<BigRational>& cs) : TruncSeries(order) {
    for (std::size_t i = 0; i < cs.size() && i < coeffs_.size(); ++i) coeffs_[i] = cs[i];
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of x^i, zero above the truncation order.
  BigRational operator[](int i) const {
    if (i < 0 || i > order()) return BigRational(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }
  void set(int i, const BigRational& c) {
    if (i >= 0 && i <= order()) coeffs_[static_cast<std::size_t>(i)] = c;
  }

  /// Exponent of the first nonzero coefficient, or -1 if all known
  /// coefficients vanish.
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    truncate_to(o.order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    truncate_to(o.order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  TruncSeries& operator*=(const BigRational& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const BigRational& c) { return a *= c; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order(), b.order()));
    const int n = r.order();
    for (int i = 0; i <= n; ++i) {
      if (a.coeffs_[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; i + j <= n; ++j)
        r.coeffs_[static_cast<std::size_t>(i + j)] +=
            a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return r;
  }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Multiplicative inverse; requires a nonzero constant term.
  TruncSeries inverse() const {
    if (coeffs_[0] == 0) throw PreconditionError("series inverse needs a nonzero constant term");
    TruncSeries r(order());
    const BigRational inv0 = 1 / coeffs_[0];
    r.coeffs_[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
      BigRational acc = 0;
      for (int k = 1; k <= n; ++k)
        acc += coeffs_[static_cast<std::size_t>(k)] * r.coeffs_[static_cast<std::size_t>(n - k)];
      r.coeffs_[static_cast<std::size_t>(n)] = -acc * inv0;
    }
    return r;
  }

 private:
  static std::size_t checked(int order) {
    if (order < 0) throw PreconditionError("truncation order must be >= 0");
    return static_cast<std::size_t>(order);
  }
  void truncate_to(int o) {
    if (o < order()) coeffs_.resize(static_cast<std::size_t>(o) + 1);
    // Growing is never allowed: unknown coefficients stay unknown.
  }

  std::vector<BigRational> coeffs_;
};

inline TruncSeries pow(const TruncSeries& s, unsigned e) {
  TruncSeries r(s.order());
  r.set(0, 1);
  for (unsigned i = 0; i < e; ++i) r = r * s;
  return r;
}

}  // namespace aktangent
