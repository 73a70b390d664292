#pragma once

#include "aktangent/ak_local.hpp"
#include "aktangent/poly_parser.hpp"

#include "test_support.hpp"

#include <map>
#include <string>

namespace aktangent::testing {

inline BivarPoly normal_form(int k) { return parse_bivar_poly("y^2 + x^" + std::to_string(k + 1)); }

/// c (y^2 + x^(k+1)) plus random monomials x^i y^j of weighted degree
/// i/(k+1) + j/2 > 1, which never change the type of an A_k point.
inline BivarPoly random_ak(Random& rnd, int k) {
  BivarPoly f = normal_form(k) * BivarPoly(rnd.nonzero_rational());
  for (int n = 0; n < 4; ++n) {
    const int i = static_cast<int>(rnd.integer(0, k + 2));
    const int j = static_cast<int>(rnd.integer(0, 3));
    if (2 * i + (k + 1) * j > 2 * (k + 1)) f.add_term(i, j, rnd.rational());
  }
  return f;
}

/// Random rank-1-Hessian germ with vanishing gradient and rho_02 != 0 in a
/// sheared frame: rho_20 = rho_11 = 0.
inline GermData random_sheared_germ(Random& rnd, int max_order) {
  std::map<std::pair<int, int>, BigRational> v;
  v[{0, 2}] = rnd.nonzero_rational();
  for (int total = 3; total <= max_order; ++total)
    for (int i = 0; i <= total; ++i) v[{i, total - i}] = rnd.rational();
  return GermData::from_derivatives(v, max_order);
}

struct MovedGerm {
  BivarPoly poly;
  std::pair<BigRational, BigRational> point;
};

/// g(u, v) = f(a u + b v - p, c u + d v - q) for a random invertible (a b; c d)
/// and shift (p, q), with the point (u, v) that maps to the origin.
inline MovedGerm random_coordinate_change(Random& rnd, const BivarPoly& f) {
  BigRational a, b, c, d;
  do {
    a = rnd.rational(), b = rnd.rational(), c = rnd.rational(), d = rnd.rational();
  } while (a * d - b * c == 0);
  const BigRational p = rnd.rational(), q = rnd.rational();
  const BigRational det = a * d - b * c;
  return {f.translate(-p, -q).linear_substitute(a, b, c, d), {(d * p - b * q) / det, (-c * p + a * q) / det}};
}

}  // namespace aktangent::testing
