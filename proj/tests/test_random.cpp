#include <gtest/gtest.h>

#include <cmath>

#include "tinygraph/parallel.hpp"
#include "tinygraph/random.hpp"

using namespace tinygraph;

TEST(SplitMix, ReferenceOutputs) {
  // First outputs of the published generator from state 0.
  SplitMix64 rng(Seed{0});
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng.next(), 0x06C45D188009454FULL);
}

TEST(SplitMix, UniformAndBelow) {
  SplitMix64 rng(Seed{5});
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(rng.below(7), 7U);
  }
  EXPECT_EQ(rng.below(1), 0U);
}

TEST(SplitMix, ChildSeedsDifferAndRepeat) {
  EXPECT_EQ(child_seed(Seed{1}, 2, 3), child_seed(Seed{1}, 2, 3));
  EXPECT_NE(child_seed(Seed{1}, 2, 3), child_seed(Seed{1}, 2, 4));
  EXPECT_NE(child_seed(Seed{1}, 2, 3), child_seed(Seed{1}, 3, 3));
}

TEST(Gnp, Extremes) {
  EXPECT_EQ(sample_gnp(5, 0, Seed{1}), Graph(5));
  EXPECT_EQ(sample_gnp(5, 1, Seed{1}), complete_graph(5));
  EXPECT_THROW(sample_gnp(5, 1.5, Seed{1}), std::domain_error);
  EXPECT_THROW(sample_gnp(5, -0.1, Seed{1}), std::domain_error);
}

TEST(Gnp, Deterministic) {
  EXPECT_EQ(sample_gnp(100, 0.5, Seed{42}), sample_gnp(100, 0.5, Seed{42}));
  EXPECT_NE(sample_gnp(100, 0.5, Seed{42}), sample_gnp(100, 0.5, Seed{43}));
}

TEST(Gnp, RowMajorStreamOrder) {
  // Pair (i, j) consumes the draw at its row-major rank.
  SplitMix64 rng(Seed{77});
  const Graph g = sample_gnp(6, 0.4, Seed{77});
  for (Vertex i = 0; i < 6; ++i)
    for (Vertex j = i + 1; j < 6; ++j) EXPECT_EQ(g.adjacent(i, j), rng.uniform() < 0.4);
}

TEST(Gnp, EdgeCountMean) {
  const std::size_t draws = 10000;
  const double p = 0.2;
  const double pairs = 30 * 29 / 2.0;
  double sum = 0;
  for (std::size_t i = 0; i < draws; ++i) sum += sample_gnp(30, p, child_seed(Seed{8}, 0, i)).edge_count();
  const double mean = sum / draws;
  const double sd_of_mean = std::sqrt(pairs * p * (1 - p) / draws);
  EXPECT_LE(std::abs(mean - p * pairs), 4 * sd_of_mean);
}

TEST(Gnm, ExactEdgeCounts) {
  EXPECT_EQ(sample_gnm(4, 6, Seed{3}), complete_graph(4));
  EXPECT_EQ(sample_gnm(4, 0, Seed{3}), Graph(4));
  EXPECT_EQ(sample_gnm(6, 3, Seed{7}).edge_count(), 3U);
  for (std::uint64_t s = 0; s < 50; ++s) EXPECT_EQ(sample_gnm(40, 97, Seed{s}).edge_count(), 97U);
  EXPECT_THROW(sample_gnm(4, 7, Seed{1}), std::domain_error);
  EXPECT_EQ(sample_gnm(50, 20, Seed{9}), sample_gnm(50, 20, Seed{9}));
}

TEST(Gnm, UniformOverPairs) {
  // Each of the 10 pairs of K5 appears in a 3-edge sample with probability 3/10.
  std::vector<int> hits(10, 0);
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) {
    const Graph g = sample_gnm(5, 3, child_seed(Seed{4}, 0, i));
    int r = 0;
    for (Vertex a = 0; a < 5; ++a)
      for (Vertex b = a + 1; b < 5; ++b, ++r) hits[r] += g.adjacent(a, b);
  }
  const double sd = std::sqrt(draws * 0.3 * 0.7);
  for (int h : hits) EXPECT_LE(std::abs(h - draws * 0.3), 5 * sd);
}

TEST(Helpers, AverageDegreeEdges) {
  EXPECT_EQ(edges_for_average_degree(50, 1), 25U);
  EXPECT_EQ(edges_for_average_degree(60, 1), 30U);
  EXPECT_EQ(edges_for_average_degree(30, 0), 0U);
  EXPECT_EQ(edges_for_average_degree(10, 0.3), 2U);
}

TEST(Helpers, TransferFactor) {
  EXPECT_NEAR(transfer_factor(10, 0.5), 10 * std::sqrt(23.0), 1e-12);
  EXPECT_NEAR(transfer_factor(10, 0.5), 47.958, 1e-3);
  EXPECT_DOUBLE_EQ(transfer_factor(3, 1.0 / 3), 10);
  EXPECT_THROW(transfer_factor(10, 1.5), std::domain_error);
  EXPECT_THROW(transfer_factor(10, 0), std::domain_error);
  EXPECT_THROW(transfer_factor(10, 1), std::domain_error);
}

TEST(Helpers, RobustCeil) {
  EXPECT_EQ(robust_ceil(3.0000000000001), 3U);
  EXPECT_EQ(robust_ceil(3.001), 4U);
  EXPECT_EQ(robust_ceil(0), 0U);
}

TEST(Parallel, ThreadResolution) {
  EXPECT_EQ(resolve_threads(3), 3U);
  setenv("TINYGRAPH_THREADS", "5", 1);
  EXPECT_EQ(resolve_threads(), 5U);
  EXPECT_EQ(resolve_threads(2), 2U);
  setenv("TINYGRAPH_THREADS", "zero", 1);
  EXPECT_THROW(resolve_threads(), std::invalid_argument);
  unsetenv("TINYGRAPH_THREADS");
  EXPECT_EQ(resolve_threads(), 1U);
}

TEST(Parallel, LowestFailingTaskWins) {
  try {
    parallel_for(20, 4, [](std::size_t t, unsigned) {
      if (t == 7 || t == 13) throw std::runtime_error(std::to_string(t));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "7");
  }
}
