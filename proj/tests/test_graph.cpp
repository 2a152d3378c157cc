#include <gtest/gtest.h>

#include <random>

#include "p4d/graph.hpp"
#include "p4d/random.hpp"

using namespace p4d;

namespace {

GraphErrc error_of(std::size_t n, std::vector<Edge> edges) {
  try {
    Graph g(n, std::move(edges));
  } catch (const graph_error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return GraphErrc::too_large;
}

}  // namespace

TEST(Graph, TriangleDegrees) {
  Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.degrees(), (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_EQ(g, complete_graph(3));
}

TEST(Graph, EmptyGraph) {
  Graph g(5, {});
  EXPECT_EQ(g.num_edges(), 0u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 0u);
  EXPECT_DOUBLE_EQ(g.density(), 0.0);
}

TEST(Graph, ValidationErrors) {
  EXPECT_EQ(error_of(2, {{0, 1}, {0, 1}}), GraphErrc::duplicate_edge);
  EXPECT_EQ(error_of(2, {{0, 1}, {1, 0}}), GraphErrc::duplicate_edge);
  EXPECT_EQ(error_of(3, {{1, 1}}), GraphErrc::self_loop);
  EXPECT_EQ(error_of(3, {{0, 3}}), GraphErrc::vertex_out_of_range);
}

TEST(Graph, EdgesAreNormalisedAndSorted) {
  Graph g(4, {{3, 2}, {1, 0}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {2, 3}}));
  EXPECT_TRUE(g.has_edge(3, 2));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(Graph, Codegree) {
  EXPECT_EQ(codegree(complete_graph(3), 0, 1), 1u);
  EXPECT_EQ(codegree(cycle_graph(4), 0, 2), 2u);
  EXPECT_EQ(codegree(path_graph(3), 0, 2), 1u);
  EXPECT_EQ(codegree(star_graph(4), 0, 0), 4u);
}

TEST(Graph, Neighbors) {
  auto g = star_graph(3);
  EXPECT_EQ(g.neighbors(0), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(g.neighbors(2), (std::vector<Vertex>{0}));
}

TEST(Graph, Complement) {
  EXPECT_EQ(complement(complete_graph(3)), Graph(3, {}));
  EXPECT_EQ(complement(Graph(4, {})), complete_graph(4));
}

TEST(Graph, ComplementIsInvolution) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto g = random_graph(8, 0.4, rng);
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(g.num_edges() + complement(g).num_edges(), pair_count(8));
  }
}

TEST(Graph, RelabelPreservesDegreeMultiset) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    auto g = random_graph(12, 0.3, rng);
    auto perm = random_permutation(12, rng);
    auto h = relabel(g, perm);
    EXPECT_EQ(h.num_edges(), g.num_edges());
    for (Vertex v = 0; v < 12; ++v) EXPECT_EQ(h.degree(perm[v]), g.degree(v));
  }
}

TEST(Graph, WideGraphUsesSeveralWords) {
  auto g = complete_graph(130);
  EXPECT_EQ(g.words(), 3u);
  EXPECT_EQ(g.codegree(0, 129), 128u);
}

TEST(Graph, PairCount) {
  EXPECT_EQ(pair_count(0), 0u);
  EXPECT_EQ(pair_count(1), 0u);
  EXPECT_EQ(pair_count(10), 45u);
}
