#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tinygraph/census.hpp"
#include "tinygraph/error.hpp"

using namespace tinygraph;

TEST(CensusInduced, Examples) {
  const auto k5 = census_induced(complete_graph(5), 3);
  EXPECT_EQ(k5.classes(1), 1U);
  EXPECT_EQ(k5.classes(2), 1U);
  EXPECT_EQ(k5.classes(3), 1U);
  EXPECT_EQ(census_induced(path_graph(3), 2).classes(2), 2U);
  EXPECT_EQ(census_induced(cycle_graph(5), 4).classes(4), 1U);
}

TEST(CensusInduced, ZeroRowAndOccurrences) {
  const auto t = census_induced(cycle_graph(5), 4);
  EXPECT_EQ(t.classes(0), 1U);
  std::uint64_t total = 0;
  for (const auto& [cert, c] : t.per_k.at(2)) total += c.occurrences;
  EXPECT_EQ(total, 10U);
  EXPECT_THROW(census_induced(cycle_graph(5), 6), std::invalid_argument);
}

TEST(CensusInduced, BudgetRefusalNamesK) {
  CensusOptions options;
  options.budget = 1000;
  try {
    census_induced(Graph(30), 5, options);
    FAIL();
  } catch (const BudgetExceeded& e) {
    // 1 + 30 + 435 = 466 fits, adding C(30,3) = 4060 does not.
    EXPECT_EQ(e.limiting_k(), 3U);
  }
}

TEST(CensusSubgraph, Examples) {
  EXPECT_EQ(census_subgraphs(path_graph(3), 3).classes(3), 3U);
  EXPECT_EQ(census_subgraphs(complete_graph(5), 3).classes(3), 4U);
  EXPECT_EQ(census_subgraphs(Graph(4), 2).classes(2), 1U);
}

TEST(CensusSubgraph, EdgeStrataSumToTotal) {
  const Graph g = sample_gnp(9, 0.4, Seed{21});
  const auto t = census_subgraphs(g, 5);
  for (std::size_t k = 0; k <= 5; ++k) {
    std::size_t sum = 0;
    for (const auto& [edges, c] : t.classes_by_edges(k)) sum += c;
    EXPECT_EQ(sum, t.classes(k));
  }
}

TEST(CensusSubgraph, OccurrencesCountPairs) {
  // K3: (vertex subset, edge subset) pairs on 3 vertices = 2^3.
  const auto t = census_subgraphs(complete_graph(3), 3);
  std::uint64_t total = 0;
  for (const auto& [cert, c] : t.per_k.at(3)) total += c.occurrences;
  EXPECT_EQ(total, 8U);
  // 2 vertices of K3: 3 subsets x 2 edge choices.
  total = 0;
  for (const auto& [cert, c] : t.per_k.at(2)) total += c.occurrences;
  EXPECT_EQ(total, 6U);
}

TEST(CensusSubgraph, PartialKeepsCompleteRows) {
  const Graph g = sample_gnp(14, 0.6, Seed{5});
  CensusOptions options;
  options.budget = 20000;
  std::size_t complete = 0;
  const auto part = census_subgraphs_partial(g, 8, options, complete);
  EXPECT_LT(complete, 8U);
  const auto full = census_subgraphs(g, complete);
  for (std::size_t k = 0; k <= complete; ++k) EXPECT_EQ(part.classes(k), full.classes(k)) << k;
  EXPECT_THROW(census_subgraphs(g, 8, options), BudgetExceeded);
}

TEST(CensusInvariants, InducedBelowSubgraph) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = sample_gnp(9, 0.45, Seed{s});
    const auto ind = census_induced(g, 6);
    const auto sub = census_subgraphs(g, 6);
    for (std::size_t k = 0; k <= 6; ++k) {
      EXPECT_LE(ind.classes(k), sub.classes(k));
      EXPECT_LE(ind.classes(k), binomial_saturated(9, k));
      for (const auto& [cert, c] : ind.per_k.at(k)) EXPECT_TRUE(sub.per_k.at(k).count(cert));
    }
  }
}

TEST(CensusOracle, RandomGraphsMatchBruteForce) {
  for (std::uint64_t s = 0; s < 12; ++s) {
    const std::size_t n = 6 + s % 4;
    const Graph g = sample_gnp(n, 0.3 + 0.05 * (s % 4), Seed{500 + s});
    const std::size_t k_max = 5;
    const auto ind = census_induced(g, k_max);
    const auto sub = census_subgraphs(g, k_max);
    const auto cind = connected_census(g, k_max, CensusMode::connected_induced);
    const auto csub = connected_census(g, k_max, CensusMode::connected_subgraph);
    const auto o_ind = oracle::induced_classes(g, k_max);
    const auto o_sub = oracle::subgraph_classes(g, k_max);
    const auto o_cind = oracle::induced_classes(g, k_max, true);
    const auto o_csub = oracle::subgraph_classes(g, k_max, true);
    const auto o_by_t = oracle::subgraph_classes_by_edges(g, k_max);
    for (std::size_t k = 1; k <= k_max; ++k) {
      EXPECT_EQ(ind.classes(k), o_ind.at(k)) << s << " k=" << k;
      EXPECT_EQ(sub.classes(k), o_sub.at(k)) << s << " k=" << k;
      EXPECT_EQ(cind.classes(k), o_cind.at(k)) << s << " k=" << k;
      EXPECT_EQ(csub.classes(k), o_csub.at(k)) << s << " k=" << k;
      for (const auto& [t, c] : sub.classes_by_edges(k)) EXPECT_EQ(c, o_by_t.at({k, t}));
    }
  }
}

TEST(ConnectedCensus, Examples) {
  const Graph two_k3 = disjoint_union(complete_graph(3), complete_graph(3));
  EXPECT_EQ(connected_census(two_k3, 3, CensusMode::connected_induced).classes(3), 1U);
  EXPECT_EQ(connected_census(cycle_graph(6), 3, CensusMode::connected_induced).classes(3), 1U);
  EXPECT_EQ(connected_census(complete_graph(4), 3, CensusMode::connected_subgraph).classes(3), 2U);
  EXPECT_THROW(connected_census(cycle_graph(6), 3, CensusMode::induced), std::invalid_argument);
}

TEST(ConnectedCensus, EachConnectedSetOnce) {
  // K5 has C(5,k) connected k-sets.
  const auto t = connected_census(complete_graph(5), 5, CensusMode::connected_induced);
  for (std::size_t k = 1; k <= 5; ++k) {
    std::uint64_t total = 0;
    for (const auto& [cert, c] : t.per_k.at(k)) total += c.occurrences;
    EXPECT_EQ(total, binomial_saturated(5, k));
  }
  // Spanning trees of K4: 16.
  const auto s = connected_census(complete_graph(4), 4, CensusMode::connected_subgraph);
  std::uint64_t trees = 0;
  for (const auto& [cert, c] : s.per_k.at(4))
    if (c.edges == 3) trees += c.occurrences;
  EXPECT_EQ(trees, 16U);
}

TEST(ConnectedCensus, KMinSkipsSmallRows) {
  const auto t = connected_census(cycle_graph(8), 5, CensusMode::connected_subgraph, {}, 4);
  EXPECT_FALSE(t.covers(3));
  EXPECT_EQ(t.classes(4), 1U);
  EXPECT_EQ(t.classes(5), 1U);
}

TEST(Compose, Examples) {
  const Graph two_k3 = disjoint_union(complete_graph(3), complete_graph(3));
  EXPECT_EQ(compose_disconnected(connected_census(two_k3, 2, CensusMode::connected_subgraph), 2), 2U);
  EXPECT_EQ(compose_disconnected(connected_census(complete_graph(3), 3, CensusMode::connected_subgraph), 3),
            census_subgraphs(complete_graph(3), 3).classes(3));
  EXPECT_EQ(compose_disconnected(connected_census(Graph(1), 1, CensusMode::connected_subgraph), 1), 1U);
  EXPECT_THROW(compose_disconnected(census_induced(Graph(3), 2), 2), std::invalid_argument);
  EXPECT_THROW(compose_disconnected(connected_census(Graph(3), 2, CensusMode::connected_subgraph), 3),
               std::invalid_argument);
}

TEST(Compose, MatchesSubgraphCensusOnUnions) {
  for (std::uint64_t s = 0; s < 6; ++s) {
    Graph g = disjoint_union(sample_gnp(4, 0.7, Seed{s}), sample_gnp(3 + s % 2, 0.8, Seed{s + 50}));
    g = disjoint_union(g, cycle_graph(3 + s % 3));
    const std::size_t k = 5;
    const auto con = connected_census(g, k, CensusMode::connected_subgraph);
    const auto sub = census_subgraphs(g, k);
    for (std::size_t j = 1; j <= k; ++j) EXPECT_EQ(compose_disconnected(con, j), sub.classes(j)) << s;
  }
}

TEST(CensusParallel, MatchesSerial) {
  const Graph g = sample_gnp(14, 0.3, Seed{77});
  CensusOptions par;
  par.threads = 4;
  const CensusOptions ser;
  auto same = [](const CensusTable& a, const CensusTable& b) {
    ASSERT_EQ(a.per_k.size(), b.per_k.size());
    for (const auto& [k, row] : a.per_k) {
      const auto& other = b.per_k.at(k);
      ASSERT_EQ(row.size(), other.size());
      for (const auto& [cert, c] : row) {
        EXPECT_EQ(c.occurrences, other.at(cert).occurrences);
        EXPECT_EQ(c.edges, other.at(cert).edges);
      }
    }
  };
  same(census_induced(g, 6, par), census_induced(g, 6, ser));
  same(census_subgraphs(g, 5, par), census_subgraphs(g, 5, ser));
  same(connected_census(g, 6, CensusMode::connected_subgraph, par),
       connected_census(g, 6, CensusMode::connected_subgraph, ser));
}

TEST(Diversity, Examples) {
  EXPECT_EQ(sampled_induced_diversity(complete_graph(30), 5, 100, Seed{1}).distinct, 1U);
  EXPECT_EQ(sampled_induced_diversity(Graph(30), 5, 100, Seed{1}).distinct, 1U);
  EXPECT_THROW(sampled_induced_diversity(Graph(3), 4, 1, Seed{1}), std::invalid_argument);
  EXPECT_THROW(sampled_induced_diversity(Graph(3), 2, 0, Seed{1}), std::invalid_argument);
}

TEST(Diversity, NeverExceedsExact) {
  for (std::uint64_t s = 0; s < 8; ++s) {
    const Graph g = sample_gnp(11, 0.5, Seed{s});
    const auto exact = census_induced(g, 5);
    EXPECT_LE(sampled_induced_diversity(g, 5, 400, Seed{s + 1}).distinct, exact.classes(5));
  }
}

TEST(Binomial, Saturates) {
  EXPECT_EQ(binomial_saturated(10, 3), 120U);
  EXPECT_EQ(binomial_saturated(3, 5), 0U);
  EXPECT_EQ(binomial_saturated(67, 33), 14226520737620288370ULL);
  EXPECT_EQ(binomial_saturated(1000, 500), UINT64_MAX);
}

TEST(CensusMode, Names) {
  for (auto m : {CensusMode::induced, CensusMode::subgraph, CensusMode::connected_induced,
                 CensusMode::connected_subgraph})
    EXPECT_EQ(census_mode_from_string(to_string(m)), m);
  EXPECT_THROW(census_mode_from_string("nope"), std::invalid_argument);
}
