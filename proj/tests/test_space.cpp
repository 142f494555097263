#include <gtest/gtest.h>

#include <set>

#include "cohomlab/errors.hpp"
#include "cohomlab/space.hpp"
#include "cohomlab/tuples.hpp"
#include "oracles.hpp"

using namespace cohomlab;

namespace {

std::vector<std::pair<int, int>> as_pairs(const FiniteMetricSpace& s) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : *s.edges()) out.emplace_back(e.u, e.v);
  return out;
}

void expect_matches_oracle(const FiniteMetricSpace& s) {
  const auto d = oracle::floyd_warshall(s.size(), as_pairs(s));
  for (Point a = 0; a < s.size(); ++a)
    for (Point b = 0; b < s.size(); ++b) ASSERT_EQ(s.dist(a, b), d[a][b]) << a << "," << b;
}

}  // namespace

TEST(BuildGraphMetric, Triangle) {
  const auto s = build_graph_metric({{0, 1}, {1, 2}, {0, 2}}, 3);
  for (Point a = 0; a < 3; ++a)
    for (Point b = 0; b < 3; ++b) EXPECT_EQ(s.dist(a, b), a == b ? 0.0 : 1.0);
}

TEST(BuildGraphMetric, PathHopCount) {
  const auto s = build_graph_metric({{0, 1}, {1, 2}}, 3);
  EXPECT_EQ(s.dist(0, 2), 2.0);
  EXPECT_TRUE(s.integral());
}

TEST(BuildGraphMetric, DisconnectedNamesVertices) {
  try {
    build_graph_metric({{0, 1}}, 3);
    FAIL() << "expected DisconnectedGraph";
  } catch (const DisconnectedGraph& e) {
    EXPECT_EQ(e.unreachable, 2u);
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}

TEST(BuildGraphMetric, InvalidVertexAndSelfLoop) {
  EXPECT_THROW(build_graph_metric({{0, 3}}, 3), Error);
  EXPECT_THROW(build_graph_metric({{0, 1}, {1, 1}, {1, 2}}, 3), Error);
}

TEST(BuildGraphMetric, DuplicateEdgesAreHarmless) {
  const auto s = build_graph_metric({{0, 1}, {1, 0}, {0, 1}, {1, 2}}, 3);
  EXPECT_EQ(s.edges()->size(), 2u);
}

TEST(FromDistances, RejectsBrokenTriangle) {
  EXPECT_THROW(FiniteMetricSpace::from_distances(3, {0, 1, 5, 1, 0, 1, 5, 1, 0}), Error);
  EXPECT_THROW(FiniteMetricSpace::from_distances(2, {0, 1, 2, 0}), Error);
  EXPECT_THROW(FiniteMetricSpace::from_distances(2, {0, 0, 0, 0}), Error);
  const auto ok = FiniteMetricSpace::from_distances(3, {0, 0.5, 1, 0.5, 0, 0.5, 1, 0.5, 0});
  EXPECT_FALSE(ok.integral());
  EXPECT_TRUE(ok.within(0, 2, 1.0 - 1e-13));
  EXPECT_FALSE(ok.within(0, 2, 0.9));
}

TEST(Generators, CycleDiameter) {
  EXPECT_EQ(cycle(5).diameter(), 2.0);
  EXPECT_EQ(cycle(64).diameter(), 32.0);
  EXPECT_THROW(cycle(2), Error);
}

TEST(Generators, CycleMatchesClosedForm) {
  const auto s = cycle(17);
  const auto d = oracle::cycle_metric(17);
  for (Point a = 0; a < 17; ++a)
    for (Point b = 0; b < 17; ++b) EXPECT_EQ(s.dist(a, b), d[a][b]);
}

TEST(Generators, FreeBallSizesMatchWordEnumeration) {
  // 1 + 4 + 12 for rank 2 radius 2, checked against the word oracle.
  EXPECT_EQ(oracle::count_reduced_words(2, 2), 17u);
  for (int rank = 1; rank <= 3; ++rank)
    for (int radius = 0; radius <= 3; ++radius)
      EXPECT_EQ(free_ball(rank, radius).size(), oracle::count_reduced_words(rank, radius))
          << rank << " " << radius;
}

TEST(Generators, FreeBallIsATree) {
  const auto s = free_ball(2, 3);
  EXPECT_EQ(s.edges()->size(), s.size() - 1);
  expect_matches_oracle(s);
  EXPECT_EQ(s.labels().front(), "e");
  EXPECT_EQ(s.eccentricity(0), 3.0);
}

TEST(Generators, TorusMatchesOracle) {
  const auto s = torus(2, 5);
  EXPECT_EQ(s.size(), 25u);
  EXPECT_EQ(s.diameter(), 4.0);
  expect_matches_oracle(s);
  for (const auto deg : s.degrees()) EXPECT_EQ(deg, 4u);
  EXPECT_EQ(torus(3, 3).size(), 27u);
}

TEST(Generators, CompleteAndPath) {
  EXPECT_EQ(complete(6).diameter(), 1.0);
  EXPECT_EQ(path(8).diameter(), 7.0);
  expect_matches_oracle(path(8));
}

TEST(Generators, RandomRegularIsRegularAndConnected) {
  const auto s = random_regular(10, 3, 7);
  for (const auto deg : s.degrees()) EXPECT_EQ(deg, 3u);
  expect_matches_oracle(s);
  std::set<std::pair<Point, Point>> seen;
  for (const auto& e : *s.edges()) {
    EXPECT_NE(e.u, e.v);
    EXPECT_TRUE(seen.insert({e.u, e.v}).second);
  }
}

TEST(Generators, RandomRegularDeterministic) {
  const auto a = random_regular(32, 3, 1);
  const auto b = random_regular(32, 3, 1);
  EXPECT_EQ(a.matrix(), b.matrix());
  EXPECT_EQ(a.provenance().retries, b.provenance().retries);
  EXPECT_NE(a.matrix(), random_regular(32, 3, 2).matrix());
}

TEST(Generators, RandomRegularInfeasible) {
  EXPECT_THROW(random_regular(9, 3, 0), Error);
  EXPECT_THROW(random_regular(4, 4, 0), Error);
  EXPECT_THROW(random_regular(6, 1, 0), Error);
}

TEST(Generators, FamilyDispatch) {
  EXPECT_EQ(generate_family({"cycle", {{"size", 7}}, 0}).size(), 7u);
  EXPECT_EQ(generate_family({"torus", {{"dim", 2}, {"size", 4}}, 0}).size(), 16u);
  EXPECT_EQ(generate_family({"free_ball", {{"rank", 2}, {"radius", 2}}, 0}).size(), 17u);
  EXPECT_EQ(generate_family({"random_regular", {{"n", 12}, {"k", 3}}, 5}).size(), 12u);
  EXPECT_THROW(generate_family({"lattice", {}, 0}), Error);
  EXPECT_THROW(generate_family({"cycle", {}, 0}), Error);
}

TEST(Generators, MetricAxiomsHold) {
  for (const auto& s : {cycle(9), torus(2, 4), free_ball(2, 2), random_regular(16, 3, 3)})
    EXPECT_EQ(s.metric_violation(), "");
}

TEST(EnumerateTuples, Cycle5Singletons) {
  const auto s = cycle(5);
  for (const double R : {0.0, 1.0, 7.0}) {
    const auto dom = enumerate_tuples(s, 0, R);
    EXPECT_EQ(dom.size(), 5u);
    EXPECT_TRUE(dom.exact());
  }
}

TEST(EnumerateTuples, Cycle5PairsMatchBruteForce) {
  const auto s = cycle(5);
  const auto brute = oracle::all_tuples(oracle::cycle_metric(5), 2, 1.0);
  EXPECT_EQ(brute.size(), 15u);
  const auto dom = enumerate_tuples(s, 1, 1.0);
  ASSERT_EQ(dom.size(), brute.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    EXPECT_EQ(dom[i][0], brute[i][0]);
    EXPECT_EQ(dom[i][1], brute[i][1]);
  }
}

TEST(EnumerateTuples, VacuousRadiusGivesAllPairs) {
  const auto s = free_ball(2, 2);
  EXPECT_EQ(enumerate_tuples(s, 1, s.diameter()).size(), s.size() * s.size());
}

TEST(EnumerateTuples, CountsMatchBruteForceTriples) {
  const auto s = torus(2, 4);
  const auto d = oracle::floyd_warshall(s.size(), as_pairs(s));
  for (const double R : {0.0, 1.0, 2.0})
    EXPECT_EQ(enumerate_tuples(s, 2, R).size(), oracle::all_tuples(d, 3, R).size()) << R;
}

TEST(EnumerateTuples, MonotoneInRadius) {
  const auto s = cycle(11);
  const auto small = enumerate_tuples(s, 2, 1.0);
  const auto large = enumerate_tuples(s, 2, 3.0);
  std::set<std::vector<Point>> big;
  for (std::size_t i = 0; i < large.size(); ++i)
    big.insert({large[i].begin(), large[i].end()});
  for (std::size_t i = 0; i < small.size(); ++i)
    EXPECT_TRUE(big.count({small[i].begin(), small[i].end()}));
}

TEST(EnumerateTuples, SamplesBeyondBudget) {
  const auto s = cycle(40);
  const auto dom = enumerate_tuples(s, 2, 3.0, /*budget=*/100, /*seed=*/9, /*sample_size=*/250);
  EXPECT_FALSE(dom.exact());
  EXPECT_EQ(dom.size(), 250u);
  EXPECT_GT(dom.population(), 100u);
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (const Point a : dom[i])
      for (const Point b : dom[i]) EXPECT_LE(s.dist(a, b), 3.0);
  const auto again = enumerate_tuples(s, 2, 3.0, 100, 9, 250);
  for (std::size_t i = 0; i < dom.size(); ++i)
    EXPECT_TRUE(std::equal(dom[i].begin(), dom[i].end(), again[i].begin()));
}

TEST(EnumerateTuples, DuplicateFreeWhenExact) {
  const auto dom = enumerate_tuples(torus(2, 3), 1, 1.0);
  std::set<std::vector<Point>> seen;
  for (std::size_t i = 0; i < dom.size(); ++i)
    EXPECT_TRUE(seen.insert({dom[i].begin(), dom[i].end()}).second);
}
