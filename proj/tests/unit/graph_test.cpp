#include <gtest/gtest.h>

#include <random>

#include "monophilic/errors.hpp"
#include "monophilic/graph.hpp"
#include "monophilic/graph_enum.hpp"

using namespace monophilic;

namespace {

// Brute-force chord check: a graph is chordal iff no vertex subset of size
// >= 4 induces a cycle (connected, every degree 2).
bool has_chordless_cycle(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<unsigned> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  for (unsigned s = 0; s < (1u << n); ++s) {
    if (__builtin_popcount(s) < 4) continue;
    bool all_two = true;
    for (int v = 0; v < n && all_two; ++v)
      if (s >> v & 1) all_two = __builtin_popcount(adj[v] & s) == 2;
    if (!all_two) continue;
    unsigned reached = s & -s, frontier = reached;
    while (frontier) {
      unsigned next = 0;
      for (int v = 0; v < n; ++v)
        if (frontier >> v & 1) next |= adj[v] & s;
      frontier = next & ~reached;
      reached |= next;
    }
    if (reached == s) return true;
  }
  return false;
}

}  // namespace

TEST(Builders, Path) {
  const Graph p1 = build_path(1);
  EXPECT_EQ(p1.vertex_count(), 2);
  EXPECT_EQ(p1.edge_count(), 1u);
  const Graph p3 = build_path(3);
  EXPECT_EQ(p3, Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  int interior = 0;
  for (Vertex v = 0; v < build_path(2).vertex_count(); ++v) interior += build_path(2).degree(v) == 2;
  EXPECT_EQ(interior, 1);
  EXPECT_THROW(build_path(0), InputError);
}

TEST(Builders, CycleCompleteBipartiteTripartite) {
  EXPECT_EQ(build_cycle(3), build_complete(3));
  EXPECT_THROW(build_cycle(2), InputError);
  const Graph k23 = build_complete_bipartite(2, 3);
  EXPECT_EQ(k23.vertex_count(), 5);
  EXPECT_EQ(k23.edge_count(), 6u);
  EXPECT_FALSE(k23.adjacent(0, 1));
  EXPECT_TRUE(k23.adjacent(0, 4));
  const Graph k221 = build_complete_tripartite(2, 2, 1);
  EXPECT_EQ(k221.edge_count(), 4u + 2u + 2u);
}

TEST(Builders, Theta) {
  EXPECT_TRUE(are_isomorphic(build_theta(2, 2, 2), build_complete_bipartite(2, 3)));
  const Graph t = build_theta(2, 2, 4);
  EXPECT_EQ(t.vertex_count(), 7);
  EXPECT_EQ(t.edge_count(), 8u);
  EXPECT_EQ(build_theta(4, 2, 2), t);
  const Graph t135 = build_theta(1, 3, 5);
  EXPECT_EQ(t135.vertex_count(), 2 + 0 + 2 + 4);
  EXPECT_EQ(t135.edge_count(), 9u);
  EXPECT_THROW(build_theta(1, 1, 3), InputError);
  EXPECT_THROW(build_theta(0, 2, 3), InputError);
}

TEST(Graph, RejectsLoopsAndMultiEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
}

TEST(Graph, AdjacencyIsSymmetric) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const Graph g = random_connected_graph(7, 0.3, rng);
    for (Vertex u = 0; u < 7; ++u)
      for (Vertex v = 0; v < 7; ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
  }
}

TEST(Core, Examples) {
  EXPECT_EQ(core(build_path(5)).vertex_count(), 1);
  const Graph c4_pendant(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}});
  EXPECT_TRUE(are_isomorphic(core(c4_pendant), build_cycle(4)));
  EXPECT_EQ(core(build_cycle(4)), build_cycle(4));
  EXPECT_THROW(core(Graph(2, std::span<const Edge>{})), InputError);
}

TEST(Core, IdempotentWithMinimumDegreeTwo) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = random_connected_graph(n, 0.15, rng);
    const Graph c = core(g);
    EXPECT_EQ(core(c), c);
    if (c.vertex_count() > 1)
      for (Vertex v = 0; v < c.vertex_count(); ++v) EXPECT_GE(c.degree(v), 2);
  }
}

TEST(CoreShape, Classification) {
  EXPECT_EQ(classify_core_shape(build_cycle(6)), CoreShape::even_cycle(6));
  EXPECT_EQ(classify_core_shape(build_theta(2, 2, 2)), CoreShape::k23());
  EXPECT_EQ(classify_core_shape(build_theta(2, 2, 4)), CoreShape::make_theta(2, 2, 4));
  for (int m = 2; m <= 4; ++m)
    EXPECT_EQ(classify_core_shape(build_theta(2, 2, 2 * m)), CoreShape::make_theta(2, 2, 2 * m));
  EXPECT_EQ(classify_core_shape(build_cycle(5)).kind, CoreShape::Kind::OddCyclePresent);
  EXPECT_EQ(classify_core_shape(build_vertex()), CoreShape::single_vertex());
  EXPECT_EQ(classify_core_shape(build_complete_bipartite(3, 3)), CoreShape::other());
  EXPECT_EQ(CoreShape::make_theta(2, 2, 2), CoreShape::k23());
  EXPECT_EQ(CoreShape::make_theta(5, 1, 3).theta, (std::array<int, 3>{1, 3, 5}));
}

TEST(Chordal, Examples) {
  EXPECT_TRUE(is_chordal(build_path(6)));
  EXPECT_FALSE(is_chordal(build_cycle(4)));
  EXPECT_TRUE(is_chordal(build_complete(4)));
}

TEST(Chordal, OrderingIsSimplicial) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_chordal_graph(1 + static_cast<int>(rng() % 8), rng);
    const auto order = chordal_ordering(g);
    ASSERT_TRUE(order.has_value());
    std::vector<int> position(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < order->size(); ++i) position[(*order)[i]] = static_cast<int>(i);
    for (Vertex v : *order) {
      std::vector<Vertex> earlier;
      for (Vertex w : g.neighbors(v))
        if (position[w] < position[v]) earlier.push_back(w);
      for (std::size_t i = 0; i < earlier.size(); ++i)
        for (std::size_t j = i + 1; j < earlier.size(); ++j) EXPECT_TRUE(g.adjacent(earlier[i], earlier[j]));
    }
  }
}

// Every labelled connected graph on 7 vertices, hence every isomorphism class.
TEST(Chordal, AgreesWithChordCheckUpToSevenVertices) {
  for (const Graph& g : connected_graphs_up_to(6)) EXPECT_EQ(is_chordal(g), !has_chordless_cycle(g));
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v) pairs.emplace_back(u, v);
  int checked = 0;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back({pairs[i].first, pairs[i].second});
    const Graph g(7, edges);
    if (!is_connected(g)) continue;
    ASSERT_EQ(is_chordal(g), !has_chordless_cycle(g));
    ++checked;
  }
  EXPECT_GT(checked, 1000000);
}

TEST(Product, Examples) {
  EXPECT_TRUE(are_isomorphic(cartesian_product(build_complete(2), build_complete(2)), build_cycle(4)));
  const Graph grid = cartesian_product(build_path(2), build_path(3));
  EXPECT_EQ(grid.vertex_count(), 12);
  EXPECT_EQ(grid.edge_count(), 17u);
  for (int n = 1; n <= 3; ++n)
    EXPECT_TRUE(are_isomorphic(cartesian_product(build_complete(n), build_complete(n)),
                               line_graph(build_complete_bipartite(n, n))));
}

TEST(Product, AdjacencyRuleAndEdgeCount) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const Graph g = random_connected_graph(1 + static_cast<int>(rng() % 5), 0.4, rng);
    const Graph h = random_connected_graph(1 + static_cast<int>(rng() % 5), 0.4, rng);
    const Graph p = cartesian_product(g, h);
    const int hv = h.vertex_count();
    EXPECT_EQ(p.vertex_count(), g.vertex_count() * hv);
    EXPECT_EQ(p.edge_count(), g.vertex_count() * h.edge_count() + hv * g.edge_count());
    for (Vertex x = 0; x < p.vertex_count(); ++x) {
      for (Vertex y = 0; y < p.vertex_count(); ++y) {
        const int g1 = x / hv, h1 = x % hv, g2 = y / hv, h2 = y % hv;
        const bool expected = (g1 == g2 && h.adjacent(h1, h2)) || (h1 == h2 && g.adjacent(g1, g2));
        EXPECT_EQ(p.adjacent(x, y), expected);
      }
    }
  }
}

TEST(Structure, BridgesComponentsBipartite) {
  const Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_EQ(bridges(two_triangles), (std::vector<Edge>{{2, 3}}));
  EXPECT_TRUE(bridges(build_cycle(5)).empty());
  EXPECT_EQ(bridges(build_path(3)).size(), 3u);
  EXPECT_EQ(connected_components(disjoint_union(build_cycle(3), build_path(2))).size(), 2u);
  EXPECT_FALSE(is_bipartite(build_cycle(5)));
  EXPECT_TRUE(is_bipartite(build_theta(2, 2, 4)));
}
