#pragma once

// Resultants and discriminants over any integral domain that supports an
// exact_quotient overload (Q, Z, Q[t], ...). The determinant is computed with
// fraction-free Bareiss elimination, so Q[t] coefficients never leave Q[t].
//
// Sign conventions, fixed once:
//   resultant(p, q) = lc(q)^deg(p) * prod_{q(b)=0} p(b)
//                   = det Sylvester(q, p)
// which is (-1)^(deg p * deg q) times the other common normalization; with it
// resultant(x - a, x - b) = b - a.
//   discriminant(p) = (-1)^(n(n-1)/2) * resultant(p, p') / lc(p),  n = deg p
// so disc(x^2 + bx + c) = b^2 - 4c and disc(x^3 + px + q) = -4p^3 - 27q^2.

#include "aktangent/unipoly.hpp"

#include <cstddef>
#include <vector>

namespace aktangent {

/// Determinant by Bareiss fraction-free elimination with row pivoting.
template <class T>
T bareiss_determinant(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  bool negate = false;
  T prev = T(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == T(0)) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == T(0)) ++swap_row;
      if (swap_row == n) return T(0);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = T(0);
    }
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  return negate ? T(-det) : det;
}

/// Sylvester matrix of (a, b) in the standard layout: deg(b) shifted rows of
/// a's coefficients (descending), then deg(a) shifted rows of b's.
template <class T>
std::vector<std::vector<T>> sylvester_matrix(const UniPoly<T>& a, const UniPoly<T>& b) {
  const std::size_t m = static_cast<std::size_t>(a.degree());
  const std::size_t n = static_cast<std::size_t>(b.degree());
  const std::size_t size = m + n;
  std::vector<std::vector<T>> s(size, std::vector<T>(size, T(0)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = a[m - j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = b[n - j];
  return s;
}

template <class T>
T resultant(const UniPoly<T>& p, const UniPoly<T>& q) {
  if (p.is_zero() || q.is_zero()) throw PreconditionError("resultant of a zero polynomial");
  if (p.degree() == 0 && q.degree() == 0) return T(1);
  return bareiss_determinant(sylvester_matrix(q, p));
}

template <class T>
T discriminant(const UniPoly<T>& p) {
  if (p.degree() < 1) throw PreconditionError("discriminant needs degree >= 1");
  const long n = p.degree();
  T r = exact_quotient(resultant(p, p.derivative()), p.leading());
  if ((n * (n - 1) / 2) % 2 != 0) r = -r;
  return r;
}

}  // namespace aktangent
