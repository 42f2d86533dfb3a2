#include "monophilic/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "monophilic/errors.hpp"

namespace monophilic {

namespace {

std::vector<Edge> to_edges(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (auto [u, v] : pairs) out.push_back({u, v});
  return out;
}

}  // namespace

Graph::Graph(int vertex_count, std::span<const Edge> edges) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") references a vertex outside 0.." + std::to_string(vertex_count - 1));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InputError("repeated edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
  }
  adjacency_.assign(static_cast<std::size_t>(vertex_count), {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph::Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(vertex_count, to_edges(edges)) {}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

CoreShape CoreShape::make_theta(int a, int b, int c) {
  std::array<int, 3> lengths{a, b, c};
  std::sort(lengths.begin(), lengths.end());
  if (lengths == std::array<int, 3>{2, 2, 2}) return k23();
  CoreShape shape{Kind::Theta};
  shape.theta = lengths;
  return shape;
}

std::string CoreShape::to_string() const {
  switch (kind) {
    case Kind::SingleVertex:
      return "SingleVertex";
    case Kind::EvenCycle:
      return "EvenCycle(" + std::to_string(cycle_length) + ")";
    case Kind::OddCyclePresent:
      return "OddCyclePresent";
    case Kind::K23:
      return "K23";
    case Kind::Theta: {
      std::ostringstream os;
      os << "Theta(" << theta[0] << "," << theta[1] << "," << theta[2] << ")";
      return os.str();
    }
    case Kind::Other:
      break;
  }
  return "Other";
}

Graph build_vertex() { return Graph(1, std::span<const Edge>{}); }

Graph build_path(int k) {
  if (k < 1) throw InputError("path length must be >= 1 (use build_vertex for K_1)");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.push_back({i, i + 1});
  return Graph(k + 1, edges);
}

Graph build_cycle(int k) {
  if (k < 3) throw InputError("cycle length must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, k - 1});
  return Graph(k, edges);
}

Graph build_complete(int n) {
  if (n < 1) throw InputError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph build_complete_bipartite(int m, int n) { return build_complete_tripartite(m, n, 0); }

Graph build_complete_tripartite(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw InputError("part sizes must be nonnegative");
  const int total = a + b + c;
  auto part = [&](int v) { return v < a ? 0 : (v < a + b ? 1 : 2); };
  std::vector<Edge> edges;
  for (int u = 0; u < total; ++u)
    for (int v = u + 1; v < total; ++v)
      if (part(u) != part(v)) edges.push_back({u, v});
  return Graph(total, edges);
}

Graph build_theta(int a, int b, int c) {
  std::array<int, 3> lengths{a, b, c};
  std::sort(lengths.begin(), lengths.end());
  if (lengths[0] < 1) throw InputError("theta path lengths must be >= 1");
  if (lengths[1] == 1) throw InputError("theta with two paths of length 1 has a repeated edge");
  std::vector<Edge> edges;
  int next = 2;
  for (int length : lengths) {
    Vertex prev = 0;
    for (int step = 1; step < length; ++step) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 1});
  }
  return Graph(next, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  const int shift = g.vertex_count();
  for (Edge e : h.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(g.vertex_count() + h.vertex_count(), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> position(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (position.at(vertices[i]) != -1) throw InputError("repeated vertex in induced_subgraph");
    position[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (Edge e : g.edges()) {
    if (position[e.u] >= 0 && position[e.v] >= 0) edges.push_back({position[e.u], position[e.v]});
  }
  return Graph(static_cast<int>(vertices.size()), edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int hn = h.vertex_count();
  std::vector<Edge> edges;
  for (int a = 0; a < g.vertex_count(); ++a)
    for (Edge e : h.edges()) edges.push_back({a * hn + e.u, a * hn + e.v});
  for (Edge e : g.edges())
    for (int b = 0; b < hn; ++b) edges.push_back({e.u * hn + b, e.v * hn + b});
  return Graph(g.vertex_count() * hn, edges);
}

Graph line_graph(const Graph& g) {
  const auto& es = g.edges();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (es[i].u == es[j].u || es[i].u == es[j].v || es[i].v == es[j].u || es[i].v == es[j].v)
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return Graph(static_cast<int>(es.size()), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> permutation) {
  if (static_cast<int>(permutation.size()) != g.vertex_count()) throw InputError("relabel: size mismatch");
  std::vector<Edge> edges;
  for (Edge e : g.edges()) edges.push_back({permutation[e.u], permutation[e.v]});
  return Graph(g.vertex_count(), edges);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<Vertex> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      Vertex v = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          frontier.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Edge> bridges(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<Edge> out;
  int counter = 0;
  std::function<void(Vertex, Vertex)> visit = [&](Vertex v, Vertex parent) {
    order[v] = low[v] = counter++;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent) continue;
      if (order[w] == -1) {
        visit(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > order[v]) out.push_back({std::min(v, w), std::max(v, w)});
      } else {
        low[v] = std::min(low[v], order[w]);
      }
    }
  };
  for (Vertex s = 0; s < n; ++s)
    if (order[s] == -1) visit(s, -1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> core_vertices(const Graph& g) {
  if (g.vertex_count() == 0) throw InputError("core of the empty graph is undefined");
  if (!is_connected(g)) throw InputError("core is only defined for connected graphs");
  const int n = g.vertex_count();
  std::vector<int> degree(n);
  std::vector<char> alive(n, 1);
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] == 1) leaves.insert(v);
  }
  int remaining = n;
  while (!leaves.empty() && remaining > 1) {
    Vertex v = *leaves.begin();
    leaves.erase(leaves.begin());
    alive[v] = 0;
    --remaining;
    for (Vertex w : g.neighbors(v)) {
      if (!alive[w]) continue;
      if (--degree[w] == 1) leaves.insert(w);
      // A vertex that drops to degree 0 is the last survivor.
      if (degree[w] == 0) leaves.erase(w);
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) out.push_back(v);
  return out;
}

Graph core(const Graph& g) {
  auto vertices = core_vertices(g);
  return induced_subgraph(g, vertices);
}

CoreShape classify_core_shape(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 1) return CoreShape::single_vertex();
  if (n == 0 || !is_connected(g)) return CoreShape::other();
  if (!is_bipartite(g)) return CoreShape::odd_cycle_present();

  std::vector<Vertex> hubs;
  for (Vertex v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d < 2) return CoreShape::other();
    if (d == 3) hubs.push_back(v);
    else if (d != 2) return CoreShape::other();
  }
  if (hubs.empty()) return CoreShape::even_cycle(n);
  if (hubs.size() != 2) return CoreShape::other();

  std::array<int, 3> lengths{};
  int slot = 0;
  for (Vertex first : g.neighbors(hubs[0])) {
    Vertex prev = hubs[0];
    Vertex cur = first;
    int length = 1;
    while (g.degree(cur) == 2) {
      Vertex next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
      prev = cur;
      cur = next;
      ++length;
    }
    if (cur != hubs[1]) return CoreShape::other();
    lengths[slot++] = length;
  }
  return CoreShape::make_theta(lengths[0], lengths[1], lengths[2]);
}

std::optional<std::vector<Vertex>> chordal_ordering(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> alive(n, 1);
  std::vector<Vertex> removal;
  removal.reserve(n);
  auto simplicial = [&](Vertex v) {
    std::vector<Vertex> nbrs;
    for (Vertex w : g.neighbors(v))
      if (alive[w]) nbrs.push_back(w);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (!g.adjacent(nbrs[i], nbrs[j])) return false;
    return true;
  };
  for (int round = 0; round < n; ++round) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n && pick < 0; ++v)
      if (alive[v] && simplicial(v)) pick = v;
    if (pick < 0) return std::nullopt;
    alive[pick] = 0;
    removal.push_back(pick);
  }
  // Each removed vertex was simplicial among the vertices removed after it.
  std::reverse(removal.begin(), removal.end());
  return removal;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  const int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg(n), dh(n);
  for (Vertex v = 0; v < n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  {
    auto a = dg, b = dh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::vector<Vertex> image(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(Vertex)> extend = [&](Vertex v) {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || dg[v] != dh[w]) continue;
      bool ok = true;
      for (Vertex u : g.neighbors(v)) {
        if (u < v && !h.adjacent(image[u], w)) {
          ok = false;
          break;
        }
      }
      // No extra h-edges into the mapped prefix either.
      if (ok) {
        int prefix_edges_g = 0, prefix_edges_h = 0;
        for (Vertex u : g.neighbors(v)) prefix_edges_g += u < v;
        for (Vertex u = 0; u < v; ++u) prefix_edges_h += h.adjacent(image[u], w);
        ok = prefix_edges_g == prefix_edges_h;
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      if (extend(v + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return extend(0);
}

}  // namespace monophilic
