#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"

using namespace dynport;
using testing_support::random_map;

namespace {

RationalMap map_from(std::vector<long> num, std::vector<long> den) {
  std::vector<Rational> a, b;
  for (long x : num) a.emplace_back(x);
  for (long x : den) b.emplace_back(x);
  return RationalMap::from_rationals(a, b);
}

ProjectivePoint pt(long z) { return ProjectivePoint::affine(z); }
const ProjectivePoint kInf = ProjectivePoint::infinity();

}  // namespace

TEST(RationalMap, ValidationAndNormalization) {
  EXPECT_THROW(map_from({1, 0}, {0, 1}), DomainError);             // degree 1
  EXPECT_THROW(map_from({1, -1, 0}, {0, 1, -1}), DomainError);     // common root at 1
  EXPECT_THROW(map_from({1, 0, 0}, {0, 1}), DomainError);          // length mismatch
  RationalMap f = RationalMap::from_rationals({Rational(1, 2), 0, 0}, {0, 0, Rational(3, 4)});
  EXPECT_EQ(f.numerator().coeffs(), (std::vector<Integer>{2, 0, 0}));
  EXPECT_EQ(f.denominator().coeffs(), (std::vector<Integer>{0, 0, 3}));
  EXPECT_NE(f.resultant(), 0);
}

TEST(RationalMap, Evaluation) {
  RationalMap f = map_from({1, 0, -1}, {0, 0, 1});  // z^2 - 1
  EXPECT_EQ(f(pt(0)), pt(-1));
  EXPECT_EQ(f(pt(-1)), pt(0));
  EXPECT_EQ(f(kInf), kInf);
  EXPECT_EQ(f(ProjectivePoint::affine(Rational(1, 2))), ProjectivePoint::affine(Rational(-3, 4)));
  RationalMap g = map_from({0, 0, 1}, {1, 0, 0});  // 1/z^2
  EXPECT_EQ(g(pt(0)), kInf);
  EXPECT_EQ(g(kInf), pt(0));
}

TEST(RationalMap, IterateMatchesRepeatedEvaluation) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    RationalMap f = random_map(rng, 2 + trial % 2);
    for (unsigned n = 1; n <= 3; ++n) {
      RationalMap fn = iterate(f, n);
      EXPECT_EQ(fn.degree(), static_cast<std::size_t>(std::pow(f.degree(), n)));
      for (int k = 0; k < 5; ++k) {
        ProjectivePoint p = ProjectivePoint::affine(testing_support::random_rational(rng));
        EXPECT_EQ(fn(p), testing_support::orbit_point(f, p, n));
      }
      EXPECT_EQ(fn(kInf), testing_support::orbit_point(f, kInf, n));
    }
  }
  EXPECT_THROW(iterate(map_from({1, 0, 0}, {0, 0, 1}), 13), DomainError);
}

TEST(RationalMap, ConjugationCommutesWithEvaluation) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    RationalMap f = random_map(rng, 2);
    for (std::size_t k = 0; k < 6; ++k) {
      Mobius phi = mobius_candidate(k);
      RationalMap g = conjugate(f, phi);
      ProjectivePoint p = ProjectivePoint::affine(testing_support::random_rational(rng));
      EXPECT_EQ(phi(g(p)), f(phi(p)));
    }
  }
}

TEST(Multiplicity, BasicExamples) {
  RationalMap sq = map_from({1, 0, 0}, {0, 0, 1});
  EXPECT_EQ(multiplicity(sq, pt(0)), 2u);
  EXPECT_EQ(multiplicity(sq, kInf), 2u);
  EXPECT_EQ(multiplicity(sq, pt(1)), 1u);
  RationalMap cube = map_from({1, 0, 0, 0}, {0, 0, 0, 1});
  EXPECT_EQ(multiplicity(cube, pt(0)), 3u);
}

TEST(Multiplicity, MatchesDerivativeCountOracle) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    RationalMap f = random_map(rng, 2 + trial % 3);
    std::vector<ProjectivePoint> pts{kInf, pt(0), pt(1), pt(-1)};
    for (const auto& r : critical_divisor(f).rational_roots) pts.push_back(r.point);
    for (const auto& p : pts) {
      EXPECT_EQ(multiplicity(f, p), testing_support::derivative_count_multiplicity(f, p));
      EXPECT_LE(multiplicity(f, p), f.degree());
      EXPECT_GE(multiplicity(f, p), 1u);
    }
  }
}

TEST(CriticalDivisor, RiemannHurwitzAndRamification) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    RationalMap f = random_map(rng, 2 + trial % 3);
    auto cd = critical_divisor(f);
    EXPECT_EQ(cd.wronskian.degree(), 2 * f.degree() - 2);
    for (const auto& r : cd.rational_roots) EXPECT_EQ(multiplicity(f, r.point), 1 + r.multiplicity);
  }
  RationalMap sq = map_from({1, 0, 0}, {0, 0, 1});
  auto cd = critical_divisor(sq);
  ASSERT_EQ(cd.rational_roots.size(), 2u);
  EXPECT_EQ(cd.rational_roots[0].point, pt(0));
  EXPECT_EQ(cd.rational_roots[1].point, kInf);
}

TEST(Dynatomic, QuadraticPolynomialExamples) {
  RationalMap f = map_from({1, 0, -1}, {0, 0, 1});  // z^2 - 1
  // Fixed points: z^2 - z - 1 and infinity.
  BinaryForm phi1 = dynatomic_polynomial(f, 1);
  EXPECT_EQ(phi1.degree(), 3u);
  EXPECT_EQ(phi1(kInf), 0);
  // Period two: z^2 + z = z (z + 1), the 2-cycle {0, -1}.
  BinaryForm phi2 = dynatomic_polynomial(f, 2);
  EXPECT_EQ(phi2.coeffs(), (std::vector<Integer>{1, 1, 0}));
  EXPECT_TRUE(formal_period(f, pt(0), 2));
  EXPECT_FALSE(formal_period(f, pt(0), 1));
}

TEST(Dynatomic, ProductOverDivisorsIsPeriodicForm) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    RationalMap f = random_map(rng, 2 + trial % 2);
    for (unsigned n = 1; n <= (f.degree() == 2 ? 4u : 3u); ++n) {
      RationalMap fn = iterate(f, n);
      // Y F0 - X F1 for f^n.
      BinaryForm x({1, 0}), y({0, 1});
      BinaryForm periodic = (y * fn.numerator() - x * fn.denominator()).normalized();
      BinaryForm product({1});
      for (auto k : divisors(n)) product = product * dynatomic_polynomial(f, static_cast<unsigned>(k));
      EXPECT_EQ(product.normalized(), periodic) << "n=" << n;
    }
  }
}

TEST(Dynatomic, DegreeMatchesNu) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 6; ++trial) {
    RationalMap f = random_map(rng, 2 + trial % 2);
    for (unsigned n = 1; n <= 4; ++n)
      EXPECT_EQ(Integer(static_cast<unsigned long>(dynatomic_polynomial(f, n).degree())), nu(f.degree(), 1, n));
  }
}

TEST(Dynatomic, PeriodicPointsAreRootsProperty) {
  RationalMap f = map_from({1, 0, -1}, {0, 0, 1});
  // Orbit data of small rational points.
  for (long z = -3; z <= 3; ++z) {
    auto t = period_of_point(f, pt(z), 20);
    if (t.escapes || t.preperiod != 0) continue;
    EXPECT_TRUE(formal_period(f, pt(z), static_cast<unsigned>(t.period)));
  }
  auto t = period_of_point(f, pt(1), 20);
  EXPECT_FALSE(t.escapes);
  EXPECT_EQ(t.preperiod, 1u);
  EXPECT_EQ(t.period, 2u);
}

TEST(Multiplier, FixedPointsAndCycles) {
  RationalMap f = map_from({1, 0, -1}, {0, 0, 1});
  EXPECT_EQ(multiplier(f, pt(0), 2), Rational(0));
  EXPECT_EQ(multiplier(f, kInf), Rational(0));
  EXPECT_THROW(multiplier(f, pt(0), 1), DomainError);
  RationalMap g = map_from({1, 0, 1}, {0, 1, 0});  // z + 1/z
  EXPECT_EQ(multiplier(g, kInf), Rational(1));
  EXPECT_EQ(affine_derivative(g, Rational(2)), Rational(3, 4));
}
