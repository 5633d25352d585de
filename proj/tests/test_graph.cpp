#include <gtest/gtest.h>

#include <random>

#include "tinygraph/embedding.hpp"
#include "tinygraph/error.hpp"
#include "tinygraph/graph.hpp"
#include "tinygraph/random.hpp"

using namespace tinygraph;

TEST(Graph, EdgeBookkeeping) {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(3, 4);
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 0));
  g.remove_edge(0, 1);
  EXPECT_EQ(g.edge_count(), 1U);
  EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 5), std::out_of_range);
}

TEST(Graph, WideRows) {
  Graph g(200);
  g.add_edge(3, 150);
  g.add_edge(64, 63);
  EXPECT_EQ(g.words_per_row(), 4U);
  EXPECT_EQ(g.neighbors(150), std::vector<Vertex>{3});
  EXPECT_EQ(g.degree(63), 1U);
}

TEST(Graph, InducedSubgraphExamples) {
  const Graph c5 = cycle_graph(5);
  for (Vertex skip = 0; skip < 5; ++skip) {
    VertexSet s(5);
    for (Vertex v = 0; v < 5; ++v)
      if (v != skip) s.insert(v);
    const Graph h = induced_subgraph(c5, s);
    EXPECT_EQ(h.edge_count(), 3U);
    EXPECT_TRUE(is_connected(h));
  }
  EXPECT_EQ(induced_subgraph(complete_graph(5), VertexSet(5, {0, 1, 2})), complete_graph(3));
  EXPECT_EQ(induced_subgraph(path_graph(4), VertexSet(4, {0, 3})), Graph(2));
}

TEST(Graph, InducedSubgraphComposes) {
  const Graph g = sample_gnp(12, 0.4, Seed{3});
  const std::vector<Vertex> s{1, 2, 4, 7, 8, 11};
  const std::vector<Vertex> t_inside{0, 2, 5};  // positions within s
  const std::vector<Vertex> t{1, 4, 11};
  EXPECT_EQ(induced_subgraph(induced_subgraph(g, s), t_inside), induced_subgraph(g, t));
  EXPECT_THROW(induced_subgraph(g, VertexSet(13, {12})), std::out_of_range);
}

TEST(Graph, Components) {
  const Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
  const auto comps = connected_components(two_triangles);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0].size(), 3U);
  EXPECT_EQ(comps[1].members(), (std::vector<Vertex>{3, 4, 5}));
  EXPECT_EQ(connected_components(Graph(4)).size(), 4U);
  EXPECT_EQ(connected_components(cycle_graph(6)).size(), 1U);
  EXPECT_TRUE(connected_components(Graph(0)).empty());
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(write_graph6(Graph(1)), "@");
  EXPECT_EQ(write_graph6(Graph(0)), "?");
  EXPECT_EQ(write_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(write_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(write_graph6(complete_graph(4)), "C~");
}

TEST(Graph6, RoundTrip) {
  EXPECT_EQ(read_graph6(write_graph6(cycle_graph(5))), cycle_graph(5));
  for (std::size_t n : {0, 1, 2, 7, 62, 63, 64, 100, 300}) {
    const Graph g = sample_gnp(n, 0.3, Seed{n});
    EXPECT_EQ(read_graph6(write_graph6(g)), g) << n;
  }
  EXPECT_EQ(read_graph6(">>graph6<<Bw\n"), complete_graph(3));
}

TEST(Graph6, MediumSizeEncodingRoundTrips) {
  Graph g(63);
  g.add_edge(0, 62);
  const auto text = write_graph6(g);
  EXPECT_EQ(text.substr(0, 4), "~??~");
  EXPECT_EQ(read_graph6(text), g);
  EXPECT_EQ(read_graph6(write_graph6(Graph(62))).order(), 62U);
}

TEST(Graph6, Errors) {
  try {
    read_graph6("not-graph6!");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 3U);  // '-'
  }
  EXPECT_THROW(read_graph6("Bw?"), ParseError);   // trailing data
  EXPECT_THROW(read_graph6("C"), ParseError);     // truncated
  EXPECT_THROW(read_graph6("Bx"), ParseError);    // nonzero padding
  try {
    read_graph6_lines("Bw\nB!\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4U);
  }
}

TEST(Embedding, Examples) {
  EXPECT_TRUE(is_induced_embeddable(path_graph(4), cycle_graph(5)));
  EXPECT_FALSE(is_induced_embeddable(complete_graph(3), cycle_graph(5)));
  EXPECT_TRUE(is_induced_embeddable(Graph(2), path_graph(4)));
  EXPECT_FALSE(is_induced_embeddable(cycle_graph(6), cycle_graph(5)));
  EXPECT_TRUE(is_induced_embeddable(Graph(0), Graph(0)));
  EXPECT_FALSE(is_induced_embeddable(cycle_graph(4), complete_graph(4)));
  EXPECT_TRUE(find_subgraph_embedding(cycle_graph(4), complete_graph(4)).has_value());
}

TEST(Embedding, InducedEmbeddingIsValid) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Graph host = sample_gnp(9, 0.5, Seed{s});
    const Graph pattern = induced_subgraph(host, VertexSet(9, {0, 2, 3, 5, 8}));
    auto relabeled = permute(pattern, std::vector<Vertex>{4, 2, 0, 1, 3});
    auto emb = find_induced_embedding(relabeled, host);
    ASSERT_TRUE(emb.has_value());
    for (Vertex a = 0; a < 5; ++a)
      for (Vertex b = a + 1; b < 5; ++b)
        EXPECT_EQ(relabeled.adjacent(a, b), host.adjacent((*emb)[a], (*emb)[b]));
  }
}

TEST(Embedding, MonotoneUnderAddingVertices) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph pattern = sample_gnp(4, 0.5, Seed{100 + s});
    Graph host = sample_gnp(6, 0.5, Seed{200 + s});
    const bool before = is_induced_embeddable(pattern, host);
    Graph bigger(8);
    for (auto [u, v] : host.edges()) bigger.add_edge(u, v);
    bigger.add_edge(6, 0);
    bigger.add_edge(7, 3);
    if (before) EXPECT_TRUE(is_induced_embeddable(pattern, bigger));
  }
}

TEST(Embedding, ExcludedVerticesAreAvoided) {
  VertexSet excluded(4, {0, 1});
  EXPECT_FALSE(find_subgraph_embedding(complete_graph(3), complete_graph(4), &excluded));
  VertexSet one(4, {0});
  auto emb = find_subgraph_embedding(complete_graph(3), complete_graph(4), &one);
  ASSERT_TRUE(emb);
  for (Vertex v : *emb) EXPECT_NE(v, 0U);
}
