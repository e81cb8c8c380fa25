#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace dynport;

namespace {

StabilityInstance line(unsigned d, std::vector<long> weights, std::vector<ProjectivePoint> pts,
                       std::optional<std::vector<bool>> fixed = std::nullopt) {
  StabilityInstance inst;
  inst.dim = 1;
  inst.degree = d;
  for (long w : weights) inst.weights.emplace_back(w);
  inst.points = std::move(pts);
  inst.fixed_point_flags = std::move(fixed);
  return inst;
}

ProjectivePoint pt(long z) { return ProjectivePoint::affine(z); }

}  // namespace

TEST(Stability, QuadraticWithMarkedFixedPoint) {
  auto v = verdict(line(2, {1, 1}, {pt(0)}, std::vector<bool>{true}));
  EXPECT_EQ(v.stable.value, Trichotomy::kCertifiedNo);
  ASSERT_TRUE(v.stable.witness);
  EXPECT_EQ(v.stable.witness->points, std::vector<std::size_t>{0});
  EXPECT_EQ(v.semistable.value, Trichotomy::kCertifiedYes);
}

TEST(Stability, QuadraticWithMarkedNonFixedPoint) {
  auto v = verdict(line(2, {1, 1}, {pt(0)}, std::vector<bool>{false}));
  EXPECT_EQ(v.stable.value, Trichotomy::kCertifiedYes);
  EXPECT_EQ(v.stable.criterion, "quadratic-marked-point-not-fixed");
  // Without the fixed-point test the bands leave the question open.
  EXPECT_EQ(verdict(line(2, {1, 1}, {pt(0)})).stable.value, Trichotomy::kIndeterminate);
}

TEST(Stability, GlobalWeightCriterion) {
  auto v = verdict(line(2, {2, 1}, {pt(0)}));
  EXPECT_EQ(v.stable.value, Trichotomy::kCertifiedYes);
  EXPECT_EQ(v.stable.criterion, "global-weight-criterion");
  auto w = verdict(line(3, {1, 1}, {pt(0)}));
  EXPECT_EQ(w.stable.value, Trichotomy::kCertifiedYes);
  EXPECT_EQ(w.stable.criterion, "global-weight-criterion");
}

TEST(Stability, MumfordPoints) {
  auto v = verdict(line(2, {0, 1, 1, 1}, {pt(0), pt(1), ProjectivePoint::infinity()}));
  EXPECT_EQ(v.stable.value, Trichotomy::kCertifiedYes);
  EXPECT_EQ(v.stable.criterion, "mumford-points");
  auto bad = verdict(line(2, {0, 1, 1, 1}, {pt(0), pt(0), pt(1)}));
  EXPECT_EQ(bad.stable.value, Trichotomy::kCertifiedNo);
  EXPECT_EQ(bad.semistable.value, Trichotomy::kCertifiedNo);
  ASSERT_TRUE(bad.stable.witness);
  EXPECT_EQ(bad.stable.witness->points, (std::vector<std::size_t>{0, 1}));
  // Four points, two coinciding: semistable but not stable.
  auto four = verdict(line(2, {0, 1, 1, 1, 1}, {pt(0), pt(0), pt(1), pt(2)}));
  EXPECT_EQ(four.semistable.value, Trichotomy::kCertifiedYes);
  EXPECT_EQ(four.stable.value, Trichotomy::kCertifiedNo);
}

TEST(Stability, CdValuesOnTheLine) {
  auto inst = line(3, {2, 1, 3}, {pt(0), pt(1)});
  Subspace l{0, {1}, pt(1)};
  auto [c, d] = cd_values(inst, l, 0);
  EXPECT_EQ(c, 3);
  EXPECT_EQ(d, make_rational(4 + 2 * 2, 2));
  auto [c2, d2] = cd_values(inst, l, 2);
  EXPECT_EQ(c2, 3);
  EXPECT_EQ(d2, d + 2);
}

TEST(Stability, AbstractSubspacesInHigherDimension) {
  StabilityInstance inst;
  inst.dim = 2;
  inst.degree = 2;
  inst.weights = {0, 1, 1, 1, 1};
  // Four points with three on a line: C = 3 against D_0 = 4 * 2 / 3.
  inst.subspaces = {{1, {0, 1, 2}, std::nullopt}, {0, {0}, std::nullopt}};
  auto v = verdict(inst);
  EXPECT_EQ(v.stable.value, Trichotomy::kCertifiedNo);
  EXPECT_EQ(v.semistable.value, Trichotomy::kCertifiedNo);
  inst.subspaces = {{1, {0, 1}, std::nullopt}};
  EXPECT_EQ(verdict(inst).stable.value, Trichotomy::kCertifiedYes);
}

TEST(Stability, Validation) {
  EXPECT_THROW(verdict(line(2, {1, 1, 1}, {pt(0)})), DomainError);
  EXPECT_THROW(verdict(line(2, {1, -1}, {pt(0)})), DomainError);
  EXPECT_THROW(verdict(line(2, {1, 1}, {pt(0)}, std::vector<bool>{true, false})), DomainError);
  StabilityInstance inst;
  inst.dim = 2;
  inst.degree = 2;
  inst.weights = {1, 1};
  inst.subspaces = {{2, {0}, std::nullopt}};
  EXPECT_THROW(verdict(inst), DomainError);
  inst.subspaces = {{1, {3}, std::nullopt}};
  EXPECT_THROW(verdict(inst), DomainError);
}

TEST(Stability, VerdictConsistencyProperty) {
  // Stable implies semistable; a certified-no for semistability forces one
  // for stability; the sufficient band never contradicts the necessary one.
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> w(0, 4), z(-2, 2), count(1, 5), deg(2, 4);
  for (int i = 0; i < 500; ++i) {
    std::vector<long> weights{w(rng)};
    std::vector<ProjectivePoint> pts;
    const int n = count(rng);
    for (int k = 0; k < n; ++k) {
      weights.push_back(w(rng));
      pts.push_back(pt(z(rng)));
    }
    auto v = verdict(line(static_cast<unsigned>(deg(rng)), weights, pts));
    if (v.stable.value == Trichotomy::kCertifiedYes) { EXPECT_NE(v.semistable.value, Trichotomy::kCertifiedNo); }
    if (v.semistable.value == Trichotomy::kCertifiedNo) { EXPECT_NE(v.stable.value, Trichotomy::kCertifiedYes); }
    if (v.stable.value == Trichotomy::kCertifiedNo) { EXPECT_TRUE(v.stable.witness.has_value()); }
    if (v.stable.value == Trichotomy::kCertifiedYes) { EXPECT_FALSE(v.stable.criterion.empty()); }
  }
}
