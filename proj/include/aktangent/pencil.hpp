#pragma once

// First-principles count of the members of a generic pencil of degree-d
// curves that are tangent to a fixed line.
//
// A pencil is spanned by two forms f0, f1 vanishing at d(d+3)/2 - 1 random
// rational points. Restricting f0 + t f1 to a parametrized line P + sQ gives
// g(s; t), of degree d in s with coefficients affine in t. The member at t is
// tangent to the line exactly when g(.; t) has a repeated root, so the
// tangent members are the roots of D(t) = disc_s g. When D is squarefree the
// members are distinct and their number is deg D.

#include "aktangent/bigint.hpp"
#include "aktangent/profile.hpp"
#include "aktangent/resultant.hpp"
#include "aktangent/unipoly.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace aktangent {

using ProjectivePoint = std::array<BigRational, 3>;
/// Coefficients (a, b, c) of the line aX + bY + cZ = 0.
using ProjectiveLine = std::array<BigRational, 3>;

struct PencilOptions {
  /// Bound on numerators and denominators of random coordinates.
  int height = 100;
  int max_attempts = 25;
  /// Degrees above this are refused unless raised explicitly.
  int max_degree = 6;
};

struct PencilInstance {
  int d = 0;
  std::vector<ProjectivePoint> points;
  ProjectiveLine line{};
  /// Two points spanning the line; the line is parametrized as P + sQ.
  ProjectivePoint line_p{};
  ProjectivePoint line_q{};
  /// Exponents (a, b, c) of X^a Y^b Z^c, a + b + c = d, in basis order.
  std::vector<std::array<int, 3>> monomials;
  std::vector<BigRational> f0;
  std::vector<BigRational> f1;
  /// Configurations drawn before this one was accepted (1 = first try).
  int attempts = 1;
};

struct TangentCount {
  int count = 0;
  QPoly discriminant;
};

/// The instance is unusable (wrong interpolation corank, line through a
/// sample point, or a non-squarefree discriminant).
struct DegenerateConfigurationError : DataError {
  using DataError::DataError;
};

/// Deterministic source of bounded random rationals. Integers are taken
/// from mt19937_64 output by reduction, so the stream is identical on every
/// platform.
class RationalSampler {
 public:
  RationalSampler(std::uint64_t seed, int height) : rng_(seed), height_(height) {
    if (height < 1) throw PreconditionError("height must be >= 1");
  }

  long long integer(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(rng_() % span);
  }

  BigRational rational() { return BigRational(integer(-height_, height_), integer(1, height_)); }

  ProjectivePoint affine_point() { return {rational(), rational(), BigRational(1)}; }

 private:
  std::mt19937_64 rng_;
  int height_;
};

inline std::vector<std::array<int, 3>> degree_monomials(int d) {
  std::vector<std::array<int, 3>> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

inline BigRational ipow(const BigRational& base, int e) {
  BigRational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

/// Value of the form with the given coefficients at a point.
inline BigRational evaluate_form(const std::vector<std::array<int, 3>>& monomials,
                                 const std::vector<BigRational>& coeffs, const ProjectivePoint& p) {
  BigRational acc = 0;
  for (std::size_t m = 0; m < monomials.size(); ++m) {
    if (coeffs[m] == 0) continue;
    acc += coeffs[m] * ipow(p[0], monomials[m][0]) * ipow(p[1], monomials[m][1]) * ipow(p[2], monomials[m][2]);
  }
  return acc;
}

/// Basis of the right null space of `rows` (each row of width `cols`), by
/// exact reduced row echelon form.
inline std::vector<std::vector<BigRational>> null_space(std::vector<std::vector<BigRational>> rows, std::size_t cols) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const BigRational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const BigRational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<BigRational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<BigRational> v(cols, BigRational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[static_cast<std::size_t>(pivot_col[i])] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rescales a coordinate vector to coprime integers (same projective class).
inline std::vector<BigRational> primitive(std::vector<BigRational> v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt l = 1;
  for (const auto& c : v) l = boost::multiprecision::lcm(l, BigInt(denominator(c)));
  BigInt g = 0;
  for (auto& c : v) {
    c *= l;
    g = boost::multiprecision::gcd(g, BigInt(numerator(c)));
  }
  if (g > 1)
    for (auto& c : v) c /= g;
  return v;
}

inline ProjectivePoint primitive(const ProjectivePoint& p) {
  auto v = primitive(std::vector<BigRational>(p.begin(), p.end()));
  return {v[0], v[1], v[2]};
}

inline ProjectivePoint cross(const std::array<BigRational, 3>& u, const std::array<BigRational, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline BigRational dot(const std::array<BigRational, 3>& u, const std::array<BigRational, 3>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

/// Builds the pencil through the given points with the given line, or
/// returns nullopt if the configuration is degenerate (interpolation corank
/// other than 2, line through a sample point, or a degenerate parametrization).
inline std::optional<PencilInstance> try_pencil(int d, const std::vector<ProjectivePoint>& points,
                                                const ProjectiveLine& line, const ProjectivePoint& u,
                                                const ProjectivePoint& v) {
  PencilInstance inst;
  inst.d = d;
  inst.points = points;
  inst.line = line;
  inst.monomials = degree_monomials(d);
  if (static_cast<long long>(points.size()) != curve_space_dimension(d) - 1)
    throw PreconditionError("a pencil of degree " + std::to_string(d) + " needs " +
                            std::to_string(curve_space_dimension(d) - 1) + " points");
  if (line[0] == 0 && line[1] == 0 && line[2] == 0) return std::nullopt;
  for (const auto& p : points)
    if (dot(line, p) == 0) return std::nullopt;

  std::vector<std::vector<BigRational>> rows;
  for (const auto& point : points) {
    const ProjectivePoint p = primitive(point);
    std::vector<BigRational> row;
    for (const auto& m : inst.monomials) row.push_back(ipow(p[0], m[0]) * ipow(p[1], m[1]) * ipow(p[2], m[2]));
    rows.push_back(std::move(row));
  }
  auto basis = null_space(std::move(rows), inst.monomials.size());
  if (basis.size() != 2) return std::nullopt;
  inst.f0 = primitive(std::move(basis[0]));
  inst.f1 = primitive(std::move(basis[1]));

  inst.line_p = primitive(cross(line, u));
  inst.line_q = primitive(cross(line, v));
  const auto pq = cross(inst.line_p, inst.line_q);
  if (pq[0] == 0 && pq[1] == 0 && pq[2] == 0) return std::nullopt;
  return inst;
}

/// Draws random configurations from `seed` until one is non-degenerate.
/// `override_points`, when set, replaces the random points of the first
/// attempt (used to exercise the resampling path).
inline PencilInstance build_pencil(int d, std::uint64_t seed, const PencilOptions& opts = {},
                                   const std::vector<ProjectivePoint>* override_points = nullptr) {
  if (d < 2) throw PreconditionError("pencil degree must be >= 2");
  if (d > opts.max_degree)
    throw PreconditionError("pencil degree " + std::to_string(d) + " exceeds max_degree " +
                            std::to_string(opts.max_degree));
  RationalSampler rng(seed, opts.height);
  const auto npoints = static_cast<std::size_t>(curve_space_dimension(d) - 1);
  for (int attempt = 1; attempt <= opts.max_attempts; ++attempt) {
    std::vector<ProjectivePoint> points;
    for (std::size_t i = 0; i < npoints; ++i) points.push_back(rng.affine_point());
    if (attempt == 1 && override_points) points = *override_points;
    ProjectiveLine line{rng.rational(), rng.rational(), rng.rational()};
    ProjectivePoint u{rng.rational(), rng.rational(), rng.rational()};
    ProjectivePoint v{rng.rational(), rng.rational(), rng.rational()};
    if (auto inst = try_pencil(d, points, line, u, v)) {
      inst->attempts = attempt;
      return *inst;
    }
  }
  throw DegenerateConfigurationError("no non-degenerate pencil after " + std::to_string(opts.max_attempts) +
                                     " attempts; widen the random height");
}

/// g(s; t) = f0(P + sQ) + t f1(P + sQ) as a polynomial in s over Q[t].
inline QPolyPoly restrict_to_line(const PencilInstance& p) {
  std::array<QPoly, 3> coord;
  for (int i = 0; i < 3; ++i)
    coord[static_cast<std::size_t>(i)] = QPoly{p.line_p[static_cast<std::size_t>(i)], p.line_q[static_cast<std::size_t>(i)]};
  QPoly g0, g1;
  for (std::size_t m = 0; m < p.monomials.size(); ++m) {
    if (p.f0[m] == 0 && p.f1[m] == 0) continue;
    const QPoly mono = pow(coord[0], static_cast<unsigned>(p.monomials[m][0])) *
                       pow(coord[1], static_cast<unsigned>(p.monomials[m][1])) *
                       pow(coord[2], static_cast<unsigned>(p.monomials[m][2]));
    g0 += QPoly(p.f0[m]) * mono;
    g1 += QPoly(p.f1[m]) * mono;
  }
  std::vector<QPoly> cs;
  const int deg = std::max(g0.degree(), g1.degree());
  for (int j = 0; j <= deg; ++j) cs.push_back(QPoly{g0[static_cast<std::size_t>(j)], g1[static_cast<std::size_t>(j)]});
  return QPolyPoly(std::move(cs));
}

/// Number of tangent members: the number of roots of D(t) = disc_s g, which
/// is deg D once D is certified squarefree. The member at t = infinity (f1
/// itself) is checked separately; if it is tangent the instance is rejected
/// rather than counted, so the finite roots are all the tangent members.
/// Throws DegenerateConfigurationError for unusable instances.
inline TangentCount count_tangent_members(const PencilInstance& p) {
  const QPolyPoly g = restrict_to_line(p);
  if (g.degree() != p.d) throw DegenerateConfigurationError("restriction to the line dropped degree");
  std::vector<BigRational> at_infinity;
  for (int j = 0; j <= g.degree(); ++j) at_infinity.push_back(g[static_cast<std::size_t>(j)][1]);
  const QPoly g1(std::move(at_infinity));
  if (g1.degree() < 1 || discriminant(g1) == 0)
    throw DegenerateConfigurationError("the member at t = infinity is tangent to the line");
  QPoly disc = discriminant(g);
  if (disc.is_zero()) throw DegenerateConfigurationError("every member meets the line non-transversally");
  if (!is_squarefree(disc)) throw DegenerateConfigurationError("discriminant is not squarefree");
  return {disc.degree(), std::move(disc)};
}

struct PencilTrial {
  PencilInstance instance;
  TangentCount result;
  /// Instances discarded for a degenerate discriminant before acceptance.
  int discarded = 0;
};

/// Builds and counts, resampling (with derived seeds) when the discriminant
/// cannot be certified.
inline PencilTrial run_pencil_trial(int d, std::uint64_t seed, const PencilOptions& opts = {}) {
  for (int k = 0; k < opts.max_attempts; ++k) {
    PencilInstance inst = build_pencil(d, seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(k), opts);
    try {
      TangentCount c = count_tangent_members(inst);
      return {std::move(inst), std::move(c), k};
    } catch (const DegenerateConfigurationError&) {
    }
  }
  throw DegenerateConfigurationError("no certified pencil after " + std::to_string(opts.max_attempts) + " attempts");
}

}  // namespace aktangent
