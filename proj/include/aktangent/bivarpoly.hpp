#pragma once

#include "aktangent/bigint.hpp"
#include "aktangent/unipoly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

namespace aktangent {

/// Sparse polynomial in x, y over Q. The key (i, j) is the exponent pair of
/// x^i y^j; zero coefficients are never stored.
class BivarPoly {
 public:
  using Exponent = std::pair<int, int>;
  using Terms = std::map<Exponent, BigRational>;

  BivarPoly() = default;
  BivarPoly(const BigRational& c) {  // NOLINT(google-explicit-constructor)
    add_term(0, 0, c);
  }
  BivarPoly(int c) : BivarPoly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)

  static BivarPoly x() { return term(1, 1, 0); }
  static BivarPoly y() { return term(1, 0, 1); }
  static BivarPoly term(const BigRational& c, int i, int j) {
    BivarPoly p;
    p.add_term(i, j, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigRational coefficient(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? BigRational(0) : it->second;
  }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
  }

  void add_term(int i, int j, const BigRational& c) {
    if (i < 0 || j < 0) throw PreconditionError("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigRational operator()(const BigRational& x, const BigRational& y) const {
    BigRational acc = 0;
    for (const auto& [e, c] : terms_) {
      BigRational t = c;
      for (int k = 0; k < e.first; ++k) t *= x;
      for (int k = 0; k < e.second; ++k) t *= y;
      acc += t;
    }
    return acc;
  }

  BivarPoly& operator+=(const BivarPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
  }
  BivarPoly& operator-=(const BivarPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
  }
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator-(const BivarPoly& a) { return BivarPoly() - a; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
  }
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

  /// Partial derivative in x (var == 0) or y (var == 1).
  BivarPoly derivative(int var) const {
    BivarPoly r;
    for (const auto& [e, c] : terms_) {
      const int p = var == 0 ? e.first : e.second;
      if (p == 0) continue;
      if (var == 0)
        r.add_term(e.first - 1, e.second, c * p);
      else
        r.add_term(e.first, e.second - 1, c * p);
    }
    return r;
  }

  /// The polynomial P(a*x + b*y, c*x + d*y).
  BivarPoly linear_substitute(const BigRational& a, const BigRational& b, const BigRational& c,
                              const BigRational& d) const;

  /// The polynomial P(x + x0, y + y0): re-centres the point (x0, y0) at the origin.
  BivarPoly translate(const BigRational& x0, const BigRational& y0) const {
    return substitute(BivarPoly::x() + BivarPoly(x0), BivarPoly::y() + BivarPoly(y0));
  }

  /// Composition P(u(x, y), v(x, y)).
  BivarPoly substitute(const BivarPoly& u, const BivarPoly& v) const {
    BivarPoly r;
    std::map<int, BivarPoly> upow{{0, BivarPoly(1)}};
    std::map<int, BivarPoly> vpow{{0, BivarPoly(1)}};
    auto power = [](std::map<int, BivarPoly>& cache, const BivarPoly& base, int e) -> const BivarPoly& {
      auto it = cache.find(e);
      if (it != cache.end()) return it->second;
      int k = cache.rbegin()->first;
      BivarPoly acc = cache.rbegin()->second;
      while (k < e) {
        acc = acc * base;
        ++k;
        cache.emplace(k, acc);
      }
      return cache.at(e);
    };
    for (const auto& [e, c] : terms_) r += BivarPoly(c) * power(upow, u, e.first) * power(vpow, v, e.second);
    return r;
  }

  /// Drops every term of total degree above `max_degree`.
  BivarPoly truncated(int max_degree) const {
    BivarPoly r;
    for (const auto& [e, c] : terms_)
      if (e.first + e.second <= max_degree) r.terms_.emplace(e, c);
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const BivarPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (auto it = p.terms_.rbegin(); it != p.terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      const BigRational mag = c < 0 ? BigRational(-c) : c;
      const bool unit = mag == 1;
      if (!unit || (e.first == 0 && e.second == 0)) os << to_string(mag);
      bool need_star = !unit;
      auto var = [&](char v, int p) {
        if (p == 0) return;
        if (need_star) os << "*";
        os << v;
        if (p > 1) os << "^" << p;
        need_star = true;
      };
      var('x', e.first);
      var('y', e.second);
    }
    return os;
  }

 private:
  Terms terms_;
};

inline BivarPoly BivarPoly::linear_substitute(const BigRational& a, const BigRational& b,
                                              const BigRational& c, const BigRational& d) const {
  return substitute(BivarPoly::term(a, 1, 0) + BivarPoly::term(b, 0, 1),
                    BivarPoly::term(c, 1, 0) + BivarPoly::term(d, 0, 1));
}

inline BivarPoly pow(const BivarPoly& p, unsigned e) {
  BivarPoly r(1);
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

inline std::string to_string(const BivarPoly& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace aktangent
