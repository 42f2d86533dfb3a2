#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <span>
#include <vector>

#include "monophilic/graph.hpp"

namespace monophilic {

using Color = int;
// Sorted ascending, no duplicates, every colour positive.
using ColorList = std::vector<Color>;
// Exact coloring counts; these overflow machine words quickly.
using Count = boost::multiprecision::cpp_int;

// A list of allowed colours for every vertex 0..vertex_count()-1.
class ListAssignment {
 public:
  ListAssignment() = default;
  // Sorts and deduplicates each list; throws InputError on colours < 1.
  explicit ListAssignment(std::vector<ColorList> lists);

  // L(v) = {1..n} for every vertex.
  static ListAssignment uniform(int vertex_count, int n);

  int vertex_count() const noexcept { return static_cast<int>(lists_.size()); }
  const ColorList& operator[](Vertex v) const { return lists_.at(v); }
  const std::vector<ColorList>& lists() const noexcept { return lists_; }
  void set(Vertex v, ColorList list);

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<ColorList> lists_;
};

struct Pin {
  Vertex vertex = 0;
  Color color = 0;
};

// G minus the pinned vertices together with the induced lists
// L_c(v) = L(v) \ {c_i : v_i adjacent to v}.
struct InducedInstance {
  Graph graph;
  ListAssignment lists;
  std::vector<Vertex> original;  // original[i] = id of vertex i in the parent graph
  // False when two adjacent pinned vertices share a colour; the pinned count
  // is then 0 whatever col(graph, lists) says.
  bool pins_consistent = true;
};

// Number of proper colorings of g from L. Throws InputError when L does not
// cover exactly the vertices of g, or when a connected component has more
// than 64 vertices or more than 256 colours shared along its edges.
Count col(const Graph& g, const ListAssignment& lists);

// col(g, L) with L(v) = {1..n}: the chromatic polynomial of g at n.
Count col_uniform(const Graph& g, int n);

// Colorings that give every pinned vertex its pinned colour.
Count col_pinned(const Graph& g, const ListAssignment& lists, std::span<const Pin> pins);

InducedInstance induce(const Graph& g, const ListAssignment& lists, std::span<const Pin> pins);

// Iterated colour swap on the far side of the cut edge (v1, v2) until
// L'(v1) and L'(v2) are nested. col never increases. Throws InputError if
// the edge is absent or not a bridge.
ListAssignment separating_edge_surgery(const Graph& g, const ListAssignment& lists, Edge bridge);

// Some proper coloring from L, or nullopt when col(g, L) = 0.
std::optional<std::vector<Color>> find_coloring(const Graph& g, const ListAssignment& lists);

bool is_proper_coloring(const Graph& g, const ListAssignment& lists, std::span<const Color> coloring);

namespace detail {

// Hot path for the search module. Counts colorings of the subgraph induced by
// the vertex set `active` (bit v = vertex v, at most 64 vertices) where vertex
// v may take colour c + 1 iff bit c of colour_masks[v] is set. The caller
// guarantees the count fits in 64 bits.
std::uint64_t count_small(std::span<const std::uint64_t> adjacency,
                          std::span<const std::uint64_t> colour_masks, std::uint64_t active);

}  // namespace detail

}  // namespace monophilic
