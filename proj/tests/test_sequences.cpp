#include <gtest/gtest.h>

#include <cmath>

#include "cohomlab/averaging.hpp"
#include "cohomlab/errors.hpp"
#include "cohomlab/random_cochain.hpp"
#include "cohomlab/sequences.hpp"
#include "oracles.hpp"

using namespace cohomlab;

namespace {

CochainSequence ball_sequence(const SpaceRef& s, int N) {
  std::vector<Cochain> terms;
  FamilyAxis axis{"ball radius S_n = n", {}};
  for (int n = 1; n <= N; ++n) {
    terms.push_back(ball_average(s, n).as_cochain());
    axis.values.push_back(n);
  }
  return CochainSequence(std::move(terms), std::move(axis));
}

Verdict verdict_of(std::vector<double> v) {
  std::vector<double> x;
  for (std::size_t i = 0; i < v.size(); ++i) x.push_back(static_cast<double>(i + 1));
  return classify_decay(std::move(v), std::move(x), {}).verdict;
}

}  // namespace

TEST(CochainSequence, RejectsMixedTerms) {
  const auto s = share(cycle(6));
  EXPECT_THROW(CochainSequence({random_cochain(s, 0, 0, Module::L1, 1),
                                random_cochain(s, 0, 1, Module::L1, 1)}),
               ModuleMismatch);
  EXPECT_THROW(CochainSequence({}), Error);
  EXPECT_THROW(CochainSequence({random_cochain(s, 0, 0, Module::L1, 1)}, {"axis", {1, 2}}), Error);
}

TEST(CochainSequence, TermIndexingIsOneBased) {
  const auto seq = ball_sequence(share(cycle(10)), 3);
  EXPECT_EQ(seq.term(1).name(), "ball_average");
  EXPECT_THROW(seq.term(0), Error);
  EXPECT_THROW(seq.term(4), Error);
  EXPECT_EQ(seq.axis_value(3), 3.0);
}

TEST(SeqLifts, ConstantFlatSequenceGoesToZero) {
  const auto s = share(cycle(8));
  const auto j = johnson_j01(s);
  const CochainSequence seq({j, j, j});
  const auto Dseq = seq_diff_D(seq);
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(seminorm(Dseq.term(n), 3.0).value, 0.0);
}

TEST(SeqLifts, SplitOfJohnsonCopies) {
  const auto s = share(cycle(8));
  const auto j = johnson_j01(s);
  const auto split = seq_split_s(CochainSequence({j, j}));
  for (std::size_t n = 1; n <= 2; ++n)
    EXPECT_EQ(split.term(n)({2}, {5}), SupportedVector::dipole(5, 2));
}

TEST(SeqLifts, TermwiseHomotopyIsIdentity) {
  const auto s = share(cycle(7));
  std::vector<Cochain> terms;
  for (int i = 0; i < 4; ++i) terms.push_back(random_cochain(s, 0, 1, Module::L1, 40 + i));
  const CochainSequence seq(terms);
  const auto ds = seq_diff_d(seq_split_s(seq));
  const auto sd = seq_split_s(seq_diff_d(seq));
  for (std::size_t n = 1; n <= seq.size(); ++n) {
    const auto r = audit_equal(ds.term(n) + sd.term(n), seq.term(n), 2.0, {}, "ds+sd=1");
    EXPECT_TRUE(r.passed()) << r.max_violation;
  }
}

TEST(SeqLifts, CommuteWithTermExtraction) {
  const auto s = share(cycle(9));
  std::vector<Cochain> terms{random_cochain(s, 0, 0, Module::L1, 1),
                             random_cochain(s, 0, 0, Module::L1, 2)};
  const CochainSequence seq(terms);
  const auto lifted = seq_diff_D(seq);
  for (std::size_t n = 1; n <= 2; ++n)
    EXPECT_TRUE(audit_equal(lifted.term(n), diff_D(seq.term(n)), 2.0, {}, "lift").passed());
}

TEST(SeqLifts, ReindexingRepeatsTerms) {
  const auto seq = ball_sequence(share(cycle(10)), 3);
  const std::vector<std::size_t> idx{1, 1, 2, 2, 3, 3};
  const auto r = seq.reindexed(idx);
  EXPECT_EQ(r.size(), 6u);
  EXPECT_EQ(r.axis_value(4), 2.0);
}

TEST(AsymptoticInvariance, BallAverageOnCycle64) {
  const auto s = share(cycle(64));
  const auto seq = ball_sequence(s, 10);
  const auto diag = asymptotic_invariance(seq, std::vector<double>{1.0});
  ASSERT_EQ(diag.size(), 1u);
  for (int n = 1; n <= 10; ++n) EXPECT_NEAR(diag[0].values[n - 1], 2.0 / (2 * n + 1), 1e-12);
  EXPECT_EQ(diag[0].verdict, Verdict::Decaying);
  EXPECT_TRUE(diag[0].exact);
}

TEST(AsymptoticInvariance, DiracFamilyStalls) {
  const auto s = share(cycle(16));
  const auto d = dirac_family(s).as_cochain();
  const auto diag = asymptotic_invariance(CochainSequence({d, d, d, d}), std::vector<double>{1.0, 3.0});
  for (const auto& g : diag) {
    for (const double v : g.values) EXPECT_EQ(v, 2.0);
    EXPECT_EQ(g.verdict, Verdict::Stalled);
  }
}

TEST(AsymptoticInvariance, ConstantInXDecays) {
  const auto s = share(cycle(10));
  const auto c = constant_cochain(s, 0, -1, SupportedVector::dirac(3));
  const auto diag = asymptotic_invariance(CochainSequence({c, c, c}), std::vector<double>{1.0});
  for (const double v : diag[0].values) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(diag[0].verdict, Verdict::Decaying);
}

TEST(AsymptoticInvariance, NeedsTwoTerms) {
  const auto s = share(cycle(10));
  EXPECT_THROW(asymptotic_invariance(CochainSequence({dirac_family(s).as_cochain()}),
                                     std::vector<double>{1.0}),
               Error);
}

TEST(ClassifyDecay, Thresholds) {
  EXPECT_EQ(verdict_of({1.0, 0.5, 0.33, 0.25}), Verdict::Decaying);
  EXPECT_EQ(verdict_of({1.0, 1.0, 1.0}), Verdict::Stalled);
  EXPECT_EQ(verdict_of({1.0, 2.0, 3.0, 4.0}), Verdict::Growing);
  EXPECT_EQ(verdict_of({1.0, 0.9, 0.8, 0.7}), Verdict::Stalled);
  EXPECT_EQ(verdict_of({0.0, 0.0}), Verdict::Decaying);
  EXPECT_EQ(verdict_of({0.4, 0.1, 0.0, 0.0}), Verdict::Decaying);
  EXPECT_THROW(verdict_of({1.0}), Error);
}

TEST(ClassifyDecay, FittedRateIsLogLogSlope) {
  std::vector<double> v, x;
  for (int n = 1; n <= 8; ++n) {
    v.push_back(3.0 * std::pow(n, -1.5));
    x.push_back(n);
  }
  const auto d = classify_decay(v, x, {});
  ASSERT_TRUE(d.fitted_rate);
  EXPECT_NEAR(*d.fitted_rate, -1.5, 1e-12);
}

TEST(ClassifyDecay, VerdictIsPureFunctionOfValues) {
  const std::vector<double> v{0.9, 0.4, 0.2, 0.1};
  EXPECT_EQ(verdict_of(v), verdict_of(v));
}

TEST(ClassifyDecay, DominationByNonincreasingRatio) {
  // a_n = r_n b_n with r nonincreasing in (0, 1]: b decaying => a decaying (hence not growing).
  Rng rng(3);
  for (int t = 0; t < 500; ++t) {
    std::vector<double> b, a;
    double r = 1.0;
    double w = rng.uniform(0.5, 2.0);
    for (int n = 0; n < 6; ++n) {
      w *= rng.uniform(0.2, 1.3);
      b.push_back(w);
      r *= rng.uniform(0.5, 1.0);
      a.push_back(r * w);
    }
    if (verdict_of(b) == Verdict::Decaying) EXPECT_NE(verdict_of(a), Verdict::Growing) << t;
  }
}

TEST(Counterexample, CycleAndPath) {
  for (const auto& space : {cycle(16), path(8)}) {
    const auto r = counterexample_s_not_invariant(share(space));
    EXPECT_TRUE(r.d_flat);
    EXPECT_EQ(r.d_flat_violation, 0.0);
    EXPECT_NEAR(r.ds_norm, 2.0, 1e-12);
    EXPECT_TRUE(r.exact);
  }
}

TEST(Counterexample, DegenerateSpaces) {
  EXPECT_THROW(counterexample_s_not_invariant(share(path(1))), Error);
  EXPECT_THROW(counterexample_s_not_invariant(
                   share(FiniteMetricSpace::from_distances(2, {0, 3, 3, 0}))),
               Error);
}

TEST(Counterexample, DsJohnsonValueByDirectComputation) {
  // D s phi((x0, x1), (y0)) = s phi(x1, y0) - s phi(x0, y0) = delta_{x0} - delta_{x1}.
  const auto s = share(cycle(16));
  const auto ds = diff_D(split_s(johnson_j01(s, Module::L1)));
  EXPECT_EQ(ds({4, 5}, {11}), SupportedVector::dirac(4) - SupportedVector::dirac(5));
}
