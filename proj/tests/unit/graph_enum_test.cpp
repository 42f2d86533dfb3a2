#include <gtest/gtest.h>

#include <random>

#include "monophilic/graph_enum.hpp"

using namespace monophilic;

// Connected graphs up to isomorphism (OEIS A001349).
TEST(ConnectedGraphs, ClassCounts) {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(connected_graphs(n).size(), expected[n - 1]) << n;
}

TEST(ConnectedGraphs, PairwiseNonIsomorphicAndConnected) {
  const auto graphs = connected_graphs(5);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    EXPECT_TRUE(is_connected(graphs[i]));
    for (std::size_t j = i + 1; j < graphs.size(); ++j) EXPECT_FALSE(are_isomorphic(graphs[i], graphs[j]));
  }
}

TEST(RandomGraphs, ConnectedAndChordal) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 9;
    const Graph g = random_connected_graph(n, 0.2, rng);
    EXPECT_EQ(g.vertex_count(), n);
    EXPECT_TRUE(is_connected(g));
    const Graph c = random_chordal_graph(n, rng);
    EXPECT_TRUE(is_connected(c));
    EXPECT_TRUE(is_chordal(c));
  }
}
