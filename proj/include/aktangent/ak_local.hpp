#pragma once

// Local analysis of a plane-curve germ rho(x, y) = 0 at a point.
//
// Derivative convention: rho_ij is the partial derivative
// d^(i+j) rho / dx^i dy^j at the point, not the Taylor coefficient. The Taylor
// coefficient of x^i y^j is rho_ij / (i! j!).
//
// Decision procedure for the singularity type at a point on the curve:
//   gradient != 0                    -> smooth (A_0)
//   Hessian nondegenerate            -> A_1
//   Hessian rank 1                   -> shear the kernel direction onto d/dx,
//                                       eliminate the linear y-term by the
//                                       series y = y1 + B(x); the first j >= 3
//                                       with A_j != 0 gives A_{j-1}
//   Hessian rank 0 (corank 2), or no nonzero A_j up to the requested bound
//                                    -> beyond the A_k scope

#include "aktangent/bigint.hpp"
#include "aktangent/bivarpoly.hpp"
#include "aktangent/gaussian.hpp"
#include "aktangent/series.hpp"
#include "aktangent/unipoly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aktangent {

/// Derivatives rho_ij at a point, for every i + j <= max_order.
class GermData {
 public:
  GermData() = default;

  /// Germ of a polynomial already centred at the origin.
  static GermData from_taylor(const BivarPoly& centred, int max_order) {
    if (max_order < 0) throw PreconditionError("max_order must be >= 0");
    GermData g;
    g.max_order_ = max_order;
    for (int total = 0; total <= max_order; ++total)
      for (int i = 0; i <= total; ++i) {
        const int j = total - i;
        g.rho_[{i, j}] = centred.coefficient(i, j) * BigRational(factorial(static_cast<unsigned>(i))) *
                         BigRational(factorial(static_cast<unsigned>(j)));
      }
    return g;
  }

  /// Builds a germ directly from derivative values; unspecified entries up
  /// to max_order are zero.
  static GermData from_derivatives(const std::map<std::pair<int, int>, BigRational>& values, int max_order) {
    GermData g = from_taylor(BivarPoly(), max_order);
    for (const auto& [e, v] : values) {
      if (e.first < 0 || e.second < 0 || e.first + e.second > max_order)
        throw PreconditionError("derivative index outside max_order");
      g.rho_[e] = v;
    }
    return g;
  }

  int max_order() const { return max_order_; }

  const BigRational& rho(int i, int j) const {
    if (i < 0 || j < 0 || i + j > max_order_)
      throw PreconditionError("rho_" + std::to_string(i) + std::to_string(j) + " is beyond max_order " +
                              std::to_string(max_order_));
    return rho_.at({i, j});
  }

  /// Taylor polynomial sum rho_ij / (i! j!) x^i y^j, truncated at max_order.
  BivarPoly taylor() const {
    BivarPoly p;
    for (const auto& [e, v] : rho_) {
      if (v == 0) continue;
      p.add_term(e.first, e.second,
                 v / (BigRational(factorial(static_cast<unsigned>(e.first))) *
                      BigRational(factorial(static_cast<unsigned>(e.second)))));
    }
    return p;
  }

  const std::map<std::pair<int, int>, BigRational>& derivatives() const { return rho_; }

  friend bool operator==(const GermData&, const GermData&) = default;

 private:
  std::map<std::pair<int, int>, BigRational> rho_;
  int max_order_ = -1;
};

/// Exact derivatives of `poly` at `point` up to total order max_order.
inline GermData germ_at(const BivarPoly& poly, const std::pair<BigRational, BigRational>& point, int max_order) {
  if (max_order < 2) throw PreconditionError("max_order must be >= 2");
  return GermData::from_taylor(poly.translate(point.first, point.second).truncated(max_order), max_order);
}

inline BigRational hessian_determinant(const GermData& g) {
  return g.rho(2, 0) * g.rho(0, 2) - g.rho(1, 1) * g.rho(1, 1);
}

inline int hessian_rank(const GermData& g) {
  if (hessian_determinant(g) != 0) return 2;
  if (g.rho(2, 0) != 0 || g.rho(1, 1) != 0 || g.rho(0, 2) != 0) return 1;
  return 0;
}

/// Result of aligning the Hessian kernel with d/dx. `matrix` (a, b; c, d)
/// records the substitution old(x, y) = (a x + b y, c x + d y).
struct ShearResult {
  GermData germ;
  BigRational a = 1, b = 0, c = 0, d = 1;
  bool swapped = false;
};

/// Rational linear change of coordinates after which rho_20 = rho_11 = 0 and
/// rho_02 != 0. Needs a Hessian of rank exactly 1.
inline ShearResult kernel_shear(const GermData& germ) {
  const int rank = hessian_rank(germ);
  if (rank == 0) throw PreconditionError("Hessian vanishes (corank 2): outside the A_k scope");
  if (rank == 2) throw PreconditionError("Hessian is nondegenerate (A_1): there is no kernel direction");
  ShearResult out;
  BivarPoly p = germ.taylor();
  if (germ.rho(0, 2) == 0) {
    // rank 1 with rho_02 = 0 forces rho_11 = 0 and rho_20 != 0
    p = p.linear_substitute(0, 1, 1, 0);
    out.a = 0;
    out.b = 1;
    out.c = 1;
    out.d = 0;
    out.swapped = true;
  }
  const GermData mid = GermData::from_taylor(p, germ.max_order());
  const BigRational m = mid.rho(1, 1) / mid.rho(0, 2);
  if (m != 0) {
    // d/dx_new = d/dx - m d/dy: substitute y -> y - m x
    p = p.linear_substitute(1, 0, -m, 1);
    // compose with the swap recorded above
    const BigRational a = out.a + out.b * (-m);
    const BigRational c = out.c + out.d * (-m);
    out.a = a;
    out.c = c;
  }
  out.germ = GermData::from_taylor(p.truncated(germ.max_order()), germ.max_order());
  return out;
}

/// B(x) and the reduced function A_hat_0(x) = rho(x, B(x)).
struct EliminationResult {
  TruncSeries b;
  TruncSeries a_hat0;

  /// A_j = j! [x^j] A_hat_0.
  BigRational invariant(int j) const { return a_hat0[j] * BigRational(factorial(static_cast<unsigned>(j))); }
};

/// Solves Z_1 + 2 Z_2 B + 3 Z_3 B^2 + ... = 0 for the unique series B with
/// B(0) = 0 modulo x^(order+1), where rho = sum_j Z_j(x) y^j, then returns
/// A_hat_0 = sum_j Z_j B^j. Needs a sheared germ: rho_00 = rho_10 = rho_01 =
/// rho_20 = rho_11 = 0, rho_02 != 0, and max_order >= order.
inline EliminationResult elimination_series(const GermData& germ, int order) {
  if (order < 0) throw PreconditionError("truncation order must be >= 0");
  if (germ.max_order() < std::max(order, 2)) throw PreconditionError("germ max_order is below the truncation order");
  if (germ.rho(0, 2) == 0) throw PreconditionError("elimination needs rho_02 != 0");
  constexpr std::array<std::pair<int, int>, 5> kMustVanish{{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}}};
  for (auto [i, j] : kMustVanish)
    if (germ.rho(i, j) != 0)
      throw PreconditionError("elimination needs rho_" + std::to_string(i) + std::to_string(j) + " = 0");

  const BivarPoly taylor = germ.taylor();
  std::vector<TruncSeries> z;
  for (int j = 0; j <= order; ++j) {
    TruncSeries zj(order);
    for (int i = 0; i <= order; ++i) zj.set(i, taylor.coefficient(i, j));
    z.push_back(zj);
  }
  const TruncSeries inv_two_z2 = (z[2] * BigRational(2)).inverse();

  TruncSeries b(order);
  for (int iter = 0; iter <= order + 1; ++iter) {
    TruncSeries s = z[1];
    TruncSeries bpow = b * b;  // B^(j-1)
    for (int j = 3; j <= order; ++j) {
      s += z[static_cast<std::size_t>(j)] * bpow * BigRational(j);
      bpow = bpow * b;
    }
    TruncSeries next = s * inv_two_z2 * BigRational(-1);
    if (next == b) break;
    b = next;
  }

  TruncSeries a0 = z[0];
  TruncSeries bpow = b;
  for (int j = 1; j <= order; ++j) {
    a0 += z[static_cast<std::size_t>(j)] * bpow;
    bpow = bpow * b;
  }
  return {b, a0};
}

/// Closed forms for the first invariants in a frame with rho_02 != 0:
///   A_3 = rho_30
///   A_4 = rho_40 - 3 rho_21^2 / rho_02
///   A_5 = rho_50 - 10 rho_21 rho_31 / rho_02 + 15 rho_12 rho_21^2 / rho_02^2
inline BigRational ak_closed(const GermData& g, int j) {
  if (g.rho(0, 2) == 0) throw PreconditionError("closed forms need rho_02 != 0");
  const BigRational& r02 = g.rho(0, 2);
  switch (j) {
    case 3:
      return g.rho(3, 0);
    case 4:
      return g.rho(4, 0) - 3 * g.rho(2, 1) * g.rho(2, 1) / r02;
    case 5:
      return g.rho(5, 0) - 10 * g.rho(2, 1) * g.rho(3, 1) / r02 +
             15 * g.rho(1, 2) * g.rho(2, 1) * g.rho(2, 1) / (r02 * r02);
    default:
      throw PreconditionError("closed forms exist for j = 3, 4, 5 only");
  }
}

struct SingularityType {
  enum class Kind { kSmooth, kA, kDegenerateBeyondScope };

  Kind kind = Kind::kSmooth;
  /// k for A_k; 0 when smooth.
  int k = 0;
  /// First nonzero invariant: a gradient component (smooth), the Hessian
  /// determinant (A_1), or A_{k+1} (A_k, k >= 2). Empty when degenerate.
  std::optional<BigRational> witness;
  /// For degenerate results: "corank 2" or the undecided bound.
  std::string reason;

  std::string tag() const {
    switch (kind) {
      case Kind::kSmooth:
        return "A0";
      case Kind::kA:
        return "A" + std::to_string(k);
      case Kind::kDegenerateBeyondScope:
        return "DegenerateBeyondScope";
    }
    return "?";
  }
};

/// The point does not lie on the curve.
struct NotOnCurveError : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// Classifies the germ at an arbitrary point of the curve, deciding A_k for
/// k <= k_max.
inline SingularityType classify_germ(const GermData& germ, int k_max) {
  using Kind = SingularityType::Kind;
  if (k_max < 1) throw PreconditionError("k_max must be >= 1");
  if (germ.max_order() < k_max + 1) throw PreconditionError("germ order is below k_max + 1");
  if (germ.rho(0, 0) != 0) throw NotOnCurveError("point is not on the curve (rho = " + to_string(germ.rho(0, 0)) + ")");
  if (germ.rho(1, 0) != 0) return {Kind::kSmooth, 0, germ.rho(1, 0), {}};
  if (germ.rho(0, 1) != 0) return {Kind::kSmooth, 0, germ.rho(0, 1), {}};
  const BigRational det = hessian_determinant(germ);
  if (det != 0) return {Kind::kA, 1, det, {}};
  if (hessian_rank(germ) == 0) return {Kind::kDegenerateBeyondScope, 0, std::nullopt, "corank 2"};

  const ShearResult sheared = kernel_shear(germ);
  const EliminationResult elim = elimination_series(sheared.germ, k_max + 1);
  for (int j = 3; j <= k_max + 1; ++j) {
    const BigRational a = elim.invariant(j);
    if (a != 0) return {Kind::kA, j - 1, a, {}};
  }
  return {Kind::kDegenerateBeyondScope, 0, std::nullopt,
          "no nonzero invariant up to A_" + std::to_string(k_max + 1)};
}

inline SingularityType classify(const BivarPoly& poly, const std::pair<BigRational, BigRational>& point, int k_max) {
  if (k_max < 1) throw PreconditionError("k_max must be >= 1");
  return classify_germ(germ_at(poly, point, std::max(2, k_max + 1)), k_max);
}

/// The line meets the singular point in a special direction and the
/// tangency condition vanishes identically along a branch.
struct NonGenericConfigurationError : DataError {
  using DataError::DataError;
};

struct VanishingOrder {
  std::vector<int> branch_orders;
  int total = 0;
};

/// Order of vanishing of the tangency condition M f_x + f_y along the local
/// branches of f = y^2 + x^(k+1), for a line y + M x + (higher order) = 0.
/// Branches: k even -> one branch (x, y) = (-t^2, t^(k+1)); k odd -> two
/// branches (x, y) = (t, +-i t^((k+1)/2)). Each order is the t-adic valuation
/// of the condition restricted to the branch, computed in Q(i)[t].
inline VanishingOrder tangency_vanishing_order(int k, const GaussianRational& slope) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  using GPoly = UniPoly<GaussianRational>;
  const GPoly t = GPoly::variable();
  std::vector<std::pair<GPoly, GPoly>> branches;
  if (k % 2 == 0) {
    branches.emplace_back(-pow(t, 2), pow(t, static_cast<unsigned>(k + 1)));
  } else {
    const GPoly half = pow(t, static_cast<unsigned>((k + 1) / 2));
    branches.emplace_back(t, GPoly(GaussianRational::i()) * half);
    branches.emplace_back(t, GPoly(-GaussianRational::i()) * half);
  }
  VanishingOrder out;
  for (const auto& [x, y] : branches) {
    const GPoly f = y * y + pow(x, static_cast<unsigned>(k + 1));
    if (!f.is_zero()) throw std::logic_error("branch parametrization does not lie on the curve");
    const GPoly fx = GPoly(GaussianRational(k + 1)) * pow(x, static_cast<unsigned>(k));
    const GPoly fy = GPoly(GaussianRational(2)) * y;
    const GPoly condition = GPoly(slope) * fx + fy;
    if (condition.is_zero())
      throw NonGenericConfigurationError("tangency condition vanishes identically on a branch (k=" +
                                         std::to_string(k) + ")");
    out.branch_orders.push_back(condition.order());
    out.total += condition.order();
  }
  return out;
}

inline VanishingOrder tangency_vanishing_order(int k, const BigRational& slope) {
  return tangency_vanishing_order(k, GaussianRational(slope));
}

}  // namespace aktangent
