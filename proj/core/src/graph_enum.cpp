#include "monophilic/graph_enum.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_set>

#include "monophilic/errors.hpp"

namespace monophilic {

namespace {

bool mask_connected(int n, const std::vector<Edge>& pairs, std::uint32_t mask) {
  std::uint32_t reached = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!(mask >> i & 1u)) continue;
      const std::uint32_t a = 1u << pairs[i].u, b = 1u << pairs[i].v;
      if (((reached & a) != 0) != ((reached & b) != 0)) {
        reached |= a | b;
        grew = true;
      }
    }
  }
  return reached == (1u << n) - 1;
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 6) throw InputError("connected_graphs supports 1 <= n <= 6");
  std::vector<Edge> pairs;
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      index[u][v] = index[v][u] = static_cast<int>(pairs.size());
      pairs.push_back({u, v});
    }

  // Edge-index image of every vertex permutation.
  std::vector<std::vector<int>> edge_maps;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> map(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) map[i] = index[perm[pairs[i].u]][perm[pairs[i].v]];
    edge_maps.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::unordered_set<std::uint32_t> seen;
  std::vector<Graph> out;
  const std::uint32_t limit = 1u << pairs.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (!mask_connected(n, pairs, mask)) continue;
    std::uint32_t best = mask;
    for (const auto& map : edge_maps) {
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1u) image |= 1u << map[i];
      best = std::min(best, image);
    }
    if (!seen.insert(best).second) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (best >> i & 1u) edges.push_back(pairs[i]);
    out.emplace_back(n, edges);
  }
  return out;
}

std::vector<Graph> connected_graphs_up_to(int max_vertices) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    auto batch = connected_graphs(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

Graph random_connected_graph(int n, double extra_edge_probability, std::mt19937_64& rng) {
  if (n < 1) throw InputError("random_connected_graph needs n >= 1");
  std::vector<Edge> edges;
  std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    const int u = pick(rng);
    edges.push_back({u, v});
    present[u][v] = present[v][u] = 1;
  }
  std::bernoulli_distribution coin(extra_edge_probability);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!present[u][v] && coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph random_chordal_graph(int n, std::mt19937_64& rng) {
  if (n < 1) throw InputError("random_chordal_graph needs n >= 1");
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(0.5);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    std::vector<int> clique{pick(rng)};
    std::vector<int> others;
    for (int w = 0; w < v; ++w)
      if (adj[clique[0]][w]) others.push_back(w);
    std::shuffle(others.begin(), others.end(), rng);
    for (int w : others) {
      bool joins = std::all_of(clique.begin(), clique.end(), [&](int c) { return adj[c][w]; });
      if (joins && coin(rng)) clique.push_back(w);
    }
    for (int c : clique) {
      adj[c][v] = adj[v][c] = 1;
      edges.push_back({c, v});
    }
  }
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(Graph(n, edges), perm);
}

}  // namespace monophilic
