#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace monophilic {

using Vertex = int;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite simple undirected graph on vertices 0..vertex_count()-1.
// Immutable after construction; edges are kept sorted lexicographically.
class Graph {
 public:
  Graph() = default;

  // Throws InputError on self-loops, repeated edges or out-of-range ids.
  Graph(int vertex_count, std::span<const Edge> edges);
  Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Structural tag of a core (a connected graph of minimum degree >= 2, or K_1).
struct CoreShape {
  enum class Kind { SingleVertex, EvenCycle, OddCyclePresent, K23, Theta, Other };

  Kind kind = Kind::Other;
  int cycle_length = 0;              // EvenCycle only
  std::array<int, 3> theta{0, 0, 0};  // Theta only, ascending

  static CoreShape single_vertex() { return {Kind::SingleVertex}; }
  static CoreShape even_cycle(int length) { return {Kind::EvenCycle, length}; }
  static CoreShape odd_cycle_present() { return {Kind::OddCyclePresent}; }
  static CoreShape k23() { return {Kind::K23}; }
  static CoreShape make_theta(int a, int b, int c);  // normalizes, (2,2,2) -> K23
  static CoreShape other() { return {Kind::Other}; }

  std::string to_string() const;

  friend bool operator==(const CoreShape&, const CoreShape&) = default;
};

// Builders. Numbering is part of the contract so list files stay unambiguous.

// K_1.
Graph build_vertex();
// Path with k >= 1 edges; vertices 0..k along the path.
Graph build_path(int k);
// Cycle on k >= 3 vertices; edges i ~ i+1 and k-1 ~ 0.
Graph build_cycle(int k);
// K_n, n >= 1.
Graph build_complete(int n);
// K_{m,n}: side A is 0..m-1, side B is m..m+n-1.
Graph build_complete_bipartite(int m, int n);
// K_{a,b,c}: parts are consecutive id ranges in the order a, b, c.
Graph build_complete_tripartite(int a, int b, int c);
// Theta graph: hubs 0 and 1, then the interiors of the three paths in
// ascending length order, each walked from hub 0 towards hub 1.
// Lengths are sorted first; at most one may equal 1.
Graph build_theta(int a, int b, int c);

// Vertices of h are shifted by g.vertex_count().
Graph disjoint_union(const Graph& g, const Graph& h);
// Subgraph induced by `vertices`; new id i is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
// Vertex (a, b) gets id a * h.vertex_count() + b.
Graph cartesian_product(const Graph& g, const Graph& h);
// Vertex i of the result is g.edges()[i].
Graph line_graph(const Graph& g);
// Applies new_id = permutation[old_id].
Graph relabel(const Graph& g, std::span<const Vertex> permutation);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
// Cut edges, sorted.
std::vector<Edge> bridges(const Graph& g);

// Vertices that survive iterated deletion of degree-1 vertices, ascending.
// Throws InputError if g is disconnected or empty.
std::vector<Vertex> core_vertices(const Graph& g);
Graph core(const Graph& g);

// Precondition: g is a core. Disconnected inputs classify as Other.
CoreShape classify_core_shape(const Graph& g);

// Simplicial elimination ordering v_1..v_k (each vertex's earlier neighbours
// form a clique) if g is chordal, nullopt otherwise.
std::optional<std::vector<Vertex>> chordal_ordering(const Graph& g);
inline bool is_chordal(const Graph& g) { return chordal_ordering(g).has_value(); }

// Brute-force isomorphism test. Only meant for graphs with at most ~9 vertices.
bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace monophilic
