#include <gtest/gtest.h>

#include <algorithm>

#include "cohomlab/coefficients.hpp"
#include "cohomlab/errors.hpp"
#include "cohomlab/random_cochain.hpp"
#include "cohomlab/rng.hpp"

using namespace cohomlab;

TEST(SupportedVector, CancellationEmptiesSupport) {
  const auto v = SupportedVector::dirac(3) + (-1.0) * SupportedVector::dirac(3);
  EXPECT_TRUE(v.is_zero());
  EXPECT_TRUE(v.support().empty());
  EXPECT_EQ(v.norm(), 0.0);
}

TEST(SupportedVector, SupportOfSum) {
  const auto v = SupportedVector::dirac(2) + SupportedVector::dirac(5);
  EXPECT_EQ(v.support(), (std::vector<Point>{2, 5}));
}

TEST(SupportedVector, NormOfCombination) {
  EXPECT_EQ((2.0 * SupportedVector::dirac(0) - SupportedVector::dirac(1)).norm(), 3.0);
}

TEST(SupportedVector, ScalarHasEmptySupport) {
  const auto s = SupportedVector::scalar(-2.5);
  EXPECT_TRUE(s.support().empty());
  EXPECT_EQ(s.norm(), 2.5);
  EXPECT_FALSE(s.is_zero());
}

TEST(SupportedVector, MixedModulesThrow) {
  auto a = SupportedVector::dirac(0);
  EXPECT_THROW(a += SupportedVector::scalar(1.0), ModuleMismatch);
  EXPECT_THROW(a += SupportedVector::dipole(1, 2), ModuleMismatch);
  EXPECT_THROW(SupportedVector::dirac(1, 1.0, Module::L1Zero), Error);
}

TEST(SupportedVector, ZeroSumInvariantChecked) {
  EXPECT_THROW(SupportedVector::from_entries(Module::L1Zero, {{0, 1.0}, {1, -0.5}}), Error);
  EXPECT_NO_THROW(SupportedVector::from_entries(Module::L1Zero, {{0, 1.0}, {1, -1.0}}));
}

TEST(SupportedVector, PruningKeepsNormHonest) {
  const auto v = SupportedVector::from_entries(Module::L1, {{0, 1.0}, {1, 1e-16}, {2, -3e-16}});
  EXPECT_EQ(v.support(), std::vector<Point>{0});
  EXPECT_NEAR(v.norm(), 1.0, 1e-12);
}

TEST(SupportedVector, DuplicateEntriesMerge) {
  const auto v = SupportedVector::from_entries(Module::L1, {{4, 1.0}, {1, 2.0}, {4, -0.25}});
  EXPECT_EQ(v[4], 0.75);
  EXPECT_EQ(v[1], 2.0);
  EXPECT_EQ(v[0], 0.0);
}

TEST(SupportedVector, SupportAxiomsOnRandomVectors) {
  Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    const auto v = random_vector(rng, 12, Module::L1, 1 + t % 5);
    const auto w = random_vector(rng, 12, Module::L1, 1 + t % 3);
    const auto sum = v + w;
    auto sv = v.support();
    const auto sw = w.support();
    sv.insert(sv.end(), sw.begin(), sw.end());
    for (const Point z : sum.support())
      EXPECT_NE(std::find(sv.begin(), sv.end(), z), sv.end());
    const double lambda = rng.uniform(0.5, 3.0) * (t % 2 ? 1 : -1);
    EXPECT_EQ((lambda * v).support(), v.support());
    EXPECT_EQ(v.support().empty(), v.is_zero());
    EXPECT_LE(sum.norm(), v.norm() + w.norm() + 1e-12);
  }
}

TEST(PiSum, Examples) {
  EXPECT_EQ(pi_sum(SupportedVector::dirac(4)).scalar_value(), 1.0);
  EXPECT_EQ(pi_sum(SupportedVector::dirac(2) - SupportedVector::dirac(1)).scalar_value(), 0.0);
  EXPECT_EQ(pi_sum(2.0 * SupportedVector::dirac(0) + 3.0 * SupportedVector::dirac(1))
                .scalar_value(),
            5.0);
}

TEST(PiSum, KernelIsZeroSumModule) {
  const auto v = SupportedVector::from_entries(Module::L1, {{0, 0.25}, {3, -0.25}});
  EXPECT_EQ(pi_sum(v).scalar_value(), 0.0);
  EXPECT_EQ(as_zero_sum(v).module(), Module::L1Zero);
  EXPECT_THROW(as_zero_sum(SupportedVector::dirac(0)), Error);
}

TEST(LiftScalar, DiracScaled) {
  const auto one = lift_scalar(1.0, 7);
  EXPECT_EQ(one, SupportedVector::dirac(7));
  EXPECT_EQ(one.norm(), 1.0);
  EXPECT_EQ(one.support(), std::vector<Point>{7});
  EXPECT_TRUE(lift_scalar(0.0, 3).support().empty());
  EXPECT_EQ(lift_scalar(-2.0, 3).norm(), 2.0);
  EXPECT_EQ(lift_scalar(SupportedVector::scalar(0.5), 1), SupportedVector::dirac(1, 0.5));
}

TEST(Ses, ChainLevelExactness) {
  Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    const auto v = random_vector(rng, 20, Module::L1Zero, 1 + t % 4);
    EXPECT_NEAR(pi_sum(include_zero_sum(v)).scalar_value(), 0.0, 1e-12);
    const double lambda = rng.uniform(-5, 5);
    EXPECT_EQ(pi_sum(lift_scalar(lambda, static_cast<Point>(t % 20))).scalar_value(), lambda);
  }
}

TEST(BoundaryPairs, Indicator) {
  EXPECT_EQ(boundary_pairs(PairVector::indicator(2, 5)),
            SupportedVector::dipole(5, 2));
}

TEST(BoundaryPairs, SymmetricCancels) {
  const auto h = PairVector::from_entries({{{0, 1}, 0.5}, {{1, 0}, 0.5}, {{2, 3}, -1}, {{3, 2}, -1}});
  EXPECT_TRUE(boundary_pairs(h).is_zero());
}

TEST(BoundaryPairs, RandomSumsToZeroAgainstDenseOracle) {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    std::vector<PairVector::PairEntry> entries;
    std::vector<double> dense(6, 0.0);
    for (int k = 0; k < 8; ++k) {
      const Point a = static_cast<Point>(rng.below(6));
      const Point b = static_cast<Point>(rng.below(6));
      const double c = rng.uniform(-1, 1);
      entries.push_back({{a, b}, c});
      dense[b] += c;
      dense[a] -= c;
    }
    const auto h = PairVector::from_entries(entries);
    const auto bd = boundary_pairs(h);
    EXPECT_NEAR(pi_sum(bd).scalar_value(), 0.0, 1e-12);
    EXPECT_LE(bd.norm(), 2 * h.norm() + 1e-12);
    for (Point z = 0; z < 6; ++z) EXPECT_NEAR(bd[z], dense[z], 1e-12);
  }
}

TEST(LiftBoundary, DirectConstruction) {
  const auto h = SupportedVector::dipole(4, 1);
  EXPECT_EQ(lift_boundary(h, 1), PairVector::indicator(1, 4));
  EXPECT_TRUE(lift_boundary(SupportedVector::from_entries(Module::L1Zero, {}), 3).is_zero());
}

TEST(LiftBoundary, RejectsNonZeroSum) {
  EXPECT_THROW(lift_boundary(SupportedVector::dirac(0), 0), Error);
}

TEST(LiftBoundary, RoundTripOnRandomVectors) {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    auto h = random_vector(rng, 8, Module::L1Zero, 2, true);
    if (h.norm() > 0) h *= 2.0 / h.norm();
    const Point base = static_cast<Point>(rng.below(8));
    const auto lift = lift_boundary(h, base);
    EXPECT_LE(max_entry_difference(boundary_pairs(lift), h), 1e-12);
    EXPECT_LE(lift.norm(), h.norm() + 1e-12);
    for (const auto& [pair, c] : lift.entries()) {
      EXPECT_EQ(pair.first, base);
      EXPECT_NE(h[pair.second], 0.0);
    }
  }
}

TEST(LiftBoundary, ExactWithDyadicCoefficients) {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const auto h = random_vector(rng, 8, Module::L1Zero, 3, true);
    EXPECT_EQ(boundary_pairs(lift_boundary(h, static_cast<Point>(t % 8))), h);
  }
}
