#include "aktangent/pencil.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace aktangent;
using aktangent::testing::Random;

namespace {

ProjectivePoint point_on_line(const PencilInstance& p, const BigRational& s) {
  return {p.line_p[0] + s * p.line_q[0], p.line_p[1] + s * p.line_q[1], p.line_p[2] + s * p.line_q[2]};
}

}  // namespace

TEST(Pencil, BaseTangencyLaw) {
  for (int d = 2; d <= 5; ++d)
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const PencilTrial t = run_pencil_trial(d, seed);
      EXPECT_EQ(t.result.count, 2 * (d - 1)) << "d=" << d << " seed=" << seed;
      EXPECT_EQ(t.result.discriminant.degree(), 2 * (d - 1));
      EXPECT_TRUE(is_squarefree(t.result.discriminant));
    }
}

TEST(Pencil, EveryMemberPassesThroughTheSamplePoints) {
  for (int d = 2; d <= 4; ++d) {
    const PencilInstance p = build_pencil(d, 7);
    ASSERT_EQ(static_cast<long long>(p.points.size()), curve_space_dimension(d) - 1);
    for (const auto& pt : p.points) {
      EXPECT_EQ(evaluate_form(p.monomials, p.f0, pt), 0);
      EXPECT_EQ(evaluate_form(p.monomials, p.f1, pt), 0);
    }
    // f0 and f1 are independent.
    bool independent = false;
    for (std::size_t i = 0; i < p.f0.size(); ++i)
      for (std::size_t j = 0; j < p.f0.size(); ++j)
        independent = independent || p.f0[i] * p.f1[j] != p.f0[j] * p.f1[i];
    EXPECT_TRUE(independent);
    // The line misses every sample point.
    for (const auto& pt : p.points) EXPECT_NE(dot(p.line, pt), 0);
  }
}

TEST(Pencil, RestrictionMatchesDirectEvaluation) {
  Random rnd(61);
  const PencilInstance p = build_pencil(4, 3);
  const QPolyPoly g = restrict_to_line(p);
  EXPECT_EQ(g.degree(), 4);
  for (int i = 0; i < 20; ++i) {
    const BigRational s = rnd.rational(), t = rnd.rational();
    const ProjectivePoint x = point_on_line(p, s);
    EXPECT_EQ(dot(p.line, x), 0);
    EXPECT_EQ(g(QPoly(s))(t), evaluate_form(p.monomials, p.f0, x) + t * evaluate_form(p.monomials, p.f1, x));
  }
}

TEST(Pencil, DiscriminantSpecializes) {
  Random rnd(62);
  const PencilInstance p = build_pencil(3, 11);
  const QPolyPoly g = restrict_to_line(p);
  const QPoly disc = count_tangent_members(p).discriminant;
  for (int i = 0; i < 10; ++i) {
    const BigRational t = rnd.rational();
    std::vector<BigRational> cs;
    for (int j = 0; j <= g.degree(); ++j) cs.push_back(g[static_cast<std::size_t>(j)](t));
    EXPECT_EQ(disc(t), discriminant(QPoly(cs)));
  }
}

TEST(Pencil, DeterministicInSeed) {
  const PencilTrial a = run_pencil_trial(3, 42);
  const PencilTrial b = run_pencil_trial(3, 42);
  EXPECT_EQ(a.instance.points, b.instance.points);
  EXPECT_EQ(a.instance.f0, b.instance.f0);
  EXPECT_EQ(a.instance.f1, b.instance.f1);
  EXPECT_EQ(a.result.discriminant, b.result.discriminant);
  const PencilTrial c = run_pencil_trial(3, 43);
  EXPECT_NE(a.instance.points, c.instance.points);
}

TEST(Pencil, SamplerIsBoundedAndReproducible) {
  RationalSampler a(5, 7), b(5, 7);
  for (int i = 0; i < 500; ++i) {
    const BigRational r = a.rational();
    EXPECT_EQ(r, b.rational());
    EXPECT_LE(abs(numerator(r)), 7);
    EXPECT_LE(denominator(r), 7);
  }
  EXPECT_THROW(RationalSampler(1, 0), PreconditionError);
}

TEST(Pencil, CollinearPointsAreResampled) {
  // Four collinear points do not cut out a pencil of conics.
  std::vector<ProjectivePoint> collinear;
  for (int i = 0; i < 4; ++i) collinear.push_back({BigRational(i), BigRational(2 * i + 1), BigRational(1)});
  const PencilInstance p = build_pencil(2, 9, {}, &collinear);
  EXPECT_GE(p.attempts, 2);
  EXPECT_NE(p.points, collinear);
  EXPECT_EQ(count_tangent_members(p).count, 2);
  EXPECT_FALSE(try_pencil(2, collinear, {1, 1, 1}, {1, 0, 0}, {0, 1, 0}).has_value());
}

TEST(Pencil, LineThroughASamplePointIsRejected) {
  const PencilInstance p = build_pencil(2, 4);
  const ProjectivePoint a = p.points[0];
  const ProjectiveLine through = cross(a, {BigRational(1), BigRational(2), BigRational(3)});
  EXPECT_FALSE(try_pencil(2, p.points, through, {1, 0, 0}, {0, 1, 0}).has_value());
}

TEST(Pencil, TangentMemberAtInfinityIsRejected) {
  // Line Y = 0 as (s, 0, 1); f1 = X^2 restricts to s^2, a double root.
  PencilInstance p;
  p.d = 2;
  p.monomials = degree_monomials(2);  // X^2, XY, XZ, Y^2, YZ, Z^2
  p.f0 = {0, 0, 1, 0, 0, 1};          // XZ + Z^2
  p.f1 = {1, 0, 0, 0, 0, 0};          // X^2
  p.line = {0, 1, 0};
  p.line_p = {0, 0, 1};
  p.line_q = {1, 0, 0};
  EXPECT_THROW(count_tangent_members(p), DegenerateConfigurationError);
  // With f1 = X^2 - Z^2 instead, t s^2 + s + 1 - t has discriminant
  // 1 - 4t(1 - t) = (2t - 1)^2: one member tangent twice over.
  p.f1 = {1, 0, 0, 0, 0, -1};
  EXPECT_THROW(count_tangent_members(p), DegenerateConfigurationError);
  // f1 = X^2 - 2 Z^2: 1 - 4t(1 - 2t) = 8t^2 - 4t + 1, squarefree.
  p.f1 = {1, 0, 0, 0, 0, -2};
  EXPECT_EQ(count_tangent_members(p).count, 2);
}

TEST(Pencil, Preconditions) {
  EXPECT_THROW(build_pencil(1, 1), PreconditionError);
  EXPECT_THROW(build_pencil(7, 1), PreconditionError);
  PencilOptions narrow;
  narrow.max_degree = 3;
  EXPECT_THROW(build_pencil(4, 1, narrow), PreconditionError);
  EXPECT_THROW(try_pencil(3, {}, {1, 1, 1}, {1, 0, 0}, {0, 1, 0}), PreconditionError);
}

TEST(NullSpace, SmallSystems) {
  // x + y + z = 0, x - z = 0: kernel spanned by (1, -2, 1).
  const auto basis = null_space({{1, 1, 1}, {1, 0, -1}}, 3);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], (std::vector<BigRational>{1, -2, 1}));
  EXPECT_EQ(null_space({}, 2).size(), 2u);
  EXPECT_EQ(null_space({{1, 0}, {0, 1}}, 2).size(), 0u);
}
