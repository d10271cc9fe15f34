#include <random>
#include <set>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "hang/blocks.hpp"
#include "hang/generators.hpp"
#include "hang/metrics.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace hang {
namespace {

using testing::ElementsAre;

// Every edge in exactly one block; blocks meet only at cut vertices; blocks
// cover the vertex set.
void expect_decomposition_invariants(const Graph& g, const BlockDecomposition& d) {
  const std::set<Vertex> cuts(d.cut_vertices.begin(), d.cut_vertices.end());
  for (auto [u, v] : g.edges()) {
    int owners = 0;
    for (const auto& b : d.blocks)
      owners += std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v);
    ASSERT_EQ(owners, 1) << u << "-" << v;
  }
  std::size_t block_edges = 0;
  std::set<Vertex> covered;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const auto& b = d.blocks[i];
    covered.insert(b.begin(), b.end());
    block_edges += induced_subgraph(g, b).edge_count();
    for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
      std::vector<Vertex> common;
      std::set_intersection(b.begin(), b.end(), d.blocks[j].begin(), d.blocks[j].end(),
                            std::back_inserter(common));
      ASSERT_LE(common.size(), 1u);
      if (!common.empty()) ASSERT_TRUE(cuts.count(common[0]));
    }
  }
  ASSERT_EQ(block_edges, g.edge_count());
  ASSERT_EQ(covered.size(), static_cast<std::size_t>(g.vertex_count()));
}

// Cut vertices by definition: removing v disconnects the rest.
std::vector<Vertex> brute_force_cut_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Vertex> rest;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      if (u != v) rest.push_back(u);
    if (!is_connected(induced_subgraph(g, rest))) out.push_back(v);
  }
  return out;
}

TEST(Biconnected, Path) {
  const auto d = biconnected_components(gen::path(4));
  EXPECT_THAT(d.blocks, ElementsAre(ElementsAre(0, 1), ElementsAre(1, 2), ElementsAre(2, 3)));
  EXPECT_THAT(d.cut_vertices, ElementsAre(1, 2));
}

TEST(Biconnected, Complete) {
  const auto d = biconnected_components(gen::complete(4));
  EXPECT_THAT(d.blocks, ElementsAre(ElementsAre(0, 1, 2, 3)));
  EXPECT_TRUE(d.cut_vertices.empty());
}

TEST(Biconnected, WorkedExample) {
  const Graph g = fixtures::example_g();
  const auto d = biconnected_components(g);
  EXPECT_THAT(d.blocks, ElementsAre(ElementsAre(0, 1, 2, 3), ElementsAre(2, 4)));
  EXPECT_THAT(d.cut_vertices, ElementsAre(2));
  EXPECT_EQ(to_text(d, g), "block: a b c d\nblock: c e\ncut vertices: c\n");
}

TEST(Biconnected, SingleVertexAndErrors) {
  const auto d = biconnected_components(gen::complete(1));
  EXPECT_THAT(d.blocks, ElementsAre(ElementsAre(0)));
  EXPECT_TRUE(d.cut_vertices.empty());
  EXPECT_THROW(biconnected_components(Graph::from_edge_list(3, {{0, 1}})), DisconnectedError);
  EXPECT_THROW(biconnected_components(Graph::from_edge_list(0, {})), PreconditionError);
}

TEST(Biconnected, LongPathDoesNotOverflowStack) {
  const int n = 100000;
  const auto d = biconnected_components(gen::path(n));
  EXPECT_EQ(d.blocks.size(), static_cast<std::size_t>(n - 1));
  EXPECT_EQ(d.cut_vertices.size(), static_cast<std::size_t>(n - 2));
}

TEST(Biconnected, InvariantsOnEveryConnectedGraphUpToSix) {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : fixtures::connected_graphs(n)) {
      const auto d = biconnected_components(g);
      expect_decomposition_invariants(g, d);
      ASSERT_EQ(d.cut_vertices, brute_force_cut_vertices(g));
    }
  }
}

TEST(Biconnected, InvariantsOnRandomGraphs) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const Graph g = gen::random_connected(2 + i % 30, 0.05, rng);
    const auto d = biconnected_components(g);
    expect_decomposition_invariants(g, d);
    ASSERT_EQ(d.cut_vertices, brute_force_cut_vertices(g));
  }
}

TEST(BlockGraph, Examples) {
  EXPECT_FALSE(is_block_graph(fixtures::example_g()));
  EXPECT_TRUE(is_block_graph(gen::complete(5)));
  EXPECT_FALSE(is_block_graph(gen::cycle(4)));
  EXPECT_TRUE(is_block_graph(gen::complete(1)));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    EXPECT_TRUE(is_block_graph(gen::random_tree(1 + i, rng)));
    EXPECT_TRUE(is_block_graph(gen::random_block_graph(40, 5, rng)));
  }
}

TEST(BlockGraph, MatchesSubsetCharacterizationUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : fixtures::connected_graphs(n))
      ASSERT_EQ(is_block_graph(g), oracle::block_graph_by_subsets(g)) << to_text(biconnected_components(g), g);
}

TEST(Tree, Examples) {
  EXPECT_TRUE(is_tree(gen::path(7)));
  EXPECT_FALSE(is_tree(gen::cycle(3)));
  EXPECT_TRUE(is_tree(gen::complete(1)));
  EXPECT_THROW(is_tree(Graph::from_edge_list(2, {})), DisconnectedError);
}

TEST(Tree, TreesAreBlockGraphsAndHangable) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    const Graph t = gen::random_tree(1 + static_cast<int>(rng() % 200), rng);
    ASSERT_TRUE(is_tree(t));
    ASSERT_TRUE(is_block_graph(t));
    ASSERT_TRUE(check_hangable(t).hangable);
  }
}

}  // namespace
}  // namespace hang
