#include "monophilic/count.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>

#include "monophilic/errors.hpp"

namespace monophilic {

ListAssignment::ListAssignment(std::vector<ColorList> lists) : lists_(std::move(lists)) {
  for (auto& list : lists_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    if (!list.empty() && list.front() < 1) throw InputError("colours must be positive integers");
  }
}

ListAssignment ListAssignment::uniform(int vertex_count, int n) {
  if (n < 0) throw InputError("list size must be nonnegative");
  ColorList base(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) base[c] = c + 1;
  return ListAssignment(std::vector<ColorList>(static_cast<std::size_t>(vertex_count), base));
}

void ListAssignment::set(Vertex v, ColorList list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  if (!list.empty() && list.front() < 1) throw InputError("colours must be positive integers");
  lists_.at(v) = std::move(list);
}

namespace {

using VertexMask = std::uint64_t;

constexpr int kMaxComponentVertices = 64;
constexpr int kWideWords = 4;
constexpr int kMaxSharedColours = 64 * kWideWords;
// Components smaller than this are recounted rather than memoized.
constexpr int kMemoMinVertices = 7;

struct WideMask {
  std::array<std::uint64_t, kWideWords> w{};

  WideMask& operator&=(const WideMask& o) {
    for (int i = 0; i < kWideWords; ++i) w[i] &= o.w[i];
    return *this;
  }
  WideMask& operator|=(const WideMask& o) {
    for (int i = 0; i < kWideWords; ++i) w[i] |= o.w[i];
    return *this;
  }
  friend WideMask operator&(WideMask a, const WideMask& b) { return a &= b; }
};

inline int popcount(std::uint64_t m) { return std::popcount(m); }
inline int popcount(const WideMask& m) {
  int total = 0;
  for (auto word : m.w) total += std::popcount(word);
  return total;
}
inline bool test_bit(std::uint64_t m, int i) { return (m >> i) & 1u; }
inline bool test_bit(const WideMask& m, int i) { return (m.w[i >> 6] >> (i & 63)) & 1u; }
inline void set_bit(std::uint64_t& m, int i) { m |= std::uint64_t{1} << i; }
inline void set_bit(WideMask& m, int i) { m.w[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void reset_bit(std::uint64_t& m, int i) { m &= ~(std::uint64_t{1} << i); }
inline void reset_bit(WideMask& m, int i) { m.w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

template <class F>
inline void for_each_bit(std::uint64_t m, F&& f) {
  while (m) {
    const int i = std::countr_zero(m);
    m &= m - 1;
    f(i);
  }
}
template <class F>
inline void for_each_bit(const WideMask& m, F&& f) {
  for (int k = 0; k < kWideWords; ++k) for_each_bit(m.w[k], [&](int i) { f(64 * k + i); });
}

inline void append_key(std::string& key, std::uint64_t m) {
  key.append(reinterpret_cast<const char*>(&m), sizeof m);
}
inline void append_key(std::string& key, const WideMask& m) {
  for (auto word : m.w) append_key(key, word);
}

// Backtracking counter over one graph with at most 64 vertices. Each vertex
// has a mask of colours it shares with some neighbour plus a number of
// "free" colours no neighbour can take.
template <class Mask, class Num>
class Counter {
 public:
  Counter(std::span<const VertexMask> adjacency, std::vector<Mask> lists, std::vector<std::uint32_t> free)
      : adj_(adjacency), lists_(std::move(lists)), free_(std::move(free)) {}

  Num count(VertexMask active) {
    if (!active) return 1;
    Num factor = 1;
    VertexMask rest = active;
    bool zero = false;
    for_each_bit(active, [&](int v) {
      if (zero) return;
      const auto choices = choices_of(v);
      if (choices == 0) {
        zero = true;
      } else if (!(adj_[v] & active)) {
        factor *= choices;
        rest &= ~(VertexMask{1} << v);
      }
    });
    if (zero) return 0;
    if (!rest) return factor;

    std::array<VertexMask, kMaxComponentVertices> comps;
    int comp_count = 0;
    VertexMask todo = rest;
    while (todo) {
      VertexMask comp = todo & -todo;
      VertexMask frontier = comp;
      while (frontier) {
        VertexMask grown = 0;
        for_each_bit(frontier, [&](int v) { grown |= adj_[v]; });
        grown &= rest & ~comp;
        comp |= grown;
        frontier = grown;
      }
      comps[comp_count++] = comp;
      todo &= ~comp;
    }
    std::sort(comps.begin(), comps.begin() + comp_count,
              [](VertexMask a, VertexMask b) { return std::popcount(a) < std::popcount(b); });
    for (int i = 0; i < comp_count; ++i) {
      Num part = count_connected(comps[i]);
      if (part == 0) return 0;
      factor *= part;
    }
    return factor;
  }

 private:
  std::uint32_t choices_of(int v) const { return static_cast<std::uint32_t>(popcount(lists_[v])) + free_[v]; }

  // Precondition: comp connected, at least two vertices, no empty list.
  Num count_connected(VertexMask comp) {
    std::string key;
    const bool memoize = std::popcount(comp) >= kMemoMinVertices;
    if (memoize) {
      append_key(key, comp);
      for_each_bit(comp, [&](int v) { append_key(key, lists_[v]); });
      auto hit = memo_.find(key);
      if (hit != memo_.end()) return hit->second;
    }

    // Forced vertices first; otherwise fewest choices per unit of degree.
    int pick = -1;
    std::uint32_t pick_choices = 0;
    int pick_degree = 0;
    for_each_bit(comp, [&](int v) {
      if (pick >= 0 && pick_choices == 1) return;
      const std::uint32_t c = choices_of(v);
      const int d = std::popcount(adj_[v] & comp);
      const bool better = pick < 0 || c == 1 ||
                          std::uint64_t{c} * (pick_degree + 1) < std::uint64_t{pick_choices} * (d + 1) ||
                          (std::uint64_t{c} * (pick_degree + 1) == std::uint64_t{pick_choices} * (d + 1) &&
                           d > pick_degree);
      if (better) {
        pick = v;
        pick_choices = c;
        pick_degree = d;
      }
    });

    const VertexMask neighbours = adj_[pick] & comp;
    const VertexMask rest = comp & ~(VertexMask{1} << pick);
    Mask shared{};
    for_each_bit(neighbours, [&](int u) { shared |= lists_[u]; });
    const Mask conflicting = lists_[pick] & shared;
    const std::uint32_t inert = choices_of(pick) - static_cast<std::uint32_t>(popcount(conflicting));

    Num total = 0;
    if (inert) total += Num(inert) * count(rest);
    std::array<int, kMaxComponentVertices> touched;
    for_each_bit(conflicting, [&](int c) {
      int n_touched = 0;
      for_each_bit(neighbours, [&](int u) {
        if (test_bit(lists_[u], c)) {
          reset_bit(lists_[u], c);
          touched[n_touched++] = u;
        }
      });
      total += count(rest);
      for (int i = 0; i < n_touched; ++i) set_bit(lists_[touched[i]], c);
    });

    if (memoize) memo_.emplace(std::move(key), total);
    return total;
  }

  std::span<const VertexMask> adj_;
  std::vector<Mask> lists_;
  std::vector<std::uint32_t> free_;
  std::unordered_map<std::string, Num> memo_;
};

template <class Mask, class Num>
Count run_counter(std::span<const VertexMask> adjacency, const std::vector<ColorList>& shared_lists,
                  std::vector<std::uint32_t> free, VertexMask active) {
  std::vector<Mask> masks(shared_lists.size());
  for (std::size_t v = 0; v < shared_lists.size(); ++v)
    for (Color c : shared_lists[v]) set_bit(masks[v], c);
  Counter<Mask, Num> counter(adjacency, std::move(masks), std::move(free));
  return Count(counter.count(active));
}

// One connected component with local ids.
Count count_component(const Graph& g, const ListAssignment& lists, const std::vector<Vertex>& comp) {
  const int k = static_cast<int>(comp.size());
  if (k > kMaxComponentVertices) {
    throw InputError("connected component with " + std::to_string(k) +
                     " vertices exceeds the counting engine limit of 64");
  }
  std::map<Vertex, int> local;
  for (int i = 0; i < k; ++i) local[comp[i]] = i;

  std::vector<VertexMask> adjacency(k, 0);
  for (int i = 0; i < k; ++i)
    for (Vertex w : g.neighbors(comp[i])) adjacency[i] |= VertexMask{1} << local.at(w);

  // Colours no neighbour can take never constrain anything: keep only their number.
  std::map<Color, int> dense;
  std::vector<ColorList> shared(k);
  std::vector<std::uint32_t> free(k, 0);
  Count bound = 1;
  for (int i = 0; i < k; ++i) {
    const ColorList& mine = lists[comp[i]];
    bound *= mine.size();
    for (Color c : mine) {
      bool conflicts = false;
      for (Vertex w : g.neighbors(comp[i])) {
        const ColorList& theirs = lists[w];
        if (std::binary_search(theirs.begin(), theirs.end(), c)) {
          conflicts = true;
          break;
        }
      }
      if (conflicts) {
        shared[i].push_back(c);
        dense.emplace(c, 0);
      } else {
        ++free[i];
      }
    }
  }
  int next = 0;
  for (auto& [c, idx] : dense) idx = next++;
  for (auto& list : shared)
    for (Color& c : list) c = dense.at(c);
  if (next > kMaxSharedColours) {
    throw InputError("component shares " + std::to_string(next) +
                     " colours along its edges; the counting engine supports at most 256");
  }

  const VertexMask active = k == 64 ? ~VertexMask{0} : (VertexMask{1} << k) - 1;
  const bool small_count = bound <= Count(std::numeric_limits<std::uint64_t>::max());
  if (next <= 64) {
    return small_count ? run_counter<std::uint64_t, std::uint64_t>(adjacency, shared, std::move(free), active)
                       : run_counter<std::uint64_t, Count>(adjacency, shared, std::move(free), active);
  }
  return small_count ? run_counter<WideMask, std::uint64_t>(adjacency, shared, std::move(free), active)
                     : run_counter<WideMask, Count>(adjacency, shared, std::move(free), active);
}

void require_cover(const Graph& g, const ListAssignment& lists) {
  if (lists.vertex_count() != g.vertex_count()) {
    throw InputError("list assignment covers " + std::to_string(lists.vertex_count()) +
                     " vertices but the graph has " + std::to_string(g.vertex_count()));
  }
}

bool contains(const ColorList& list, Color c) { return std::binary_search(list.begin(), list.end(), c); }

void validate_pins(const Graph& g, const ListAssignment& lists, std::span<const Pin> pins) {
  std::vector<char> pinned(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Pin& pin : pins) {
    if (pin.vertex < 0 || pin.vertex >= g.vertex_count())
      throw InputError("pin references vertex " + std::to_string(pin.vertex) + " outside the graph");
    if (pinned[pin.vertex]) throw InputError("vertex " + std::to_string(pin.vertex) + " pinned twice");
    pinned[pin.vertex] = 1;
    if (!contains(lists[pin.vertex], pin.color)) {
      throw InputError("pin colour " + std::to_string(pin.color) + " is not in the list of vertex " +
                       std::to_string(pin.vertex));
    }
  }
}

}  // namespace

Count col(const Graph& g, const ListAssignment& lists) {
  require_cover(g, lists);
  for (const auto& list : lists.lists())
    if (list.empty()) return 0;
  auto comps = connected_components(g);
  std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  Count total = 1;
  for (const auto& comp : comps) {
    Count part = count_component(g, lists, comp);
    if (part == 0) return 0;
    total *= part;
  }
  return total;
}

Count col_uniform(const Graph& g, int n) {
  if (n < 1) throw InputError("uniform list size must be >= 1");
  return col(g, ListAssignment::uniform(g.vertex_count(), n));
}

InducedInstance induce(const Graph& g, const ListAssignment& lists, std::span<const Pin> pins) {
  require_cover(g, lists);
  validate_pins(g, lists, pins);
  std::vector<Color> pinned_colour(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Pin& pin : pins) pinned_colour[pin.vertex] = pin.color;

  InducedInstance out;
  for (const Pin& pin : pins)
    for (Vertex w : g.neighbors(pin.vertex))
      if (pinned_colour[w] == pin.color) out.pins_consistent = false;

  std::vector<ColorList> induced;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (pinned_colour[v]) continue;
    out.original.push_back(v);
    ColorList list = lists[v];
    for (Vertex w : g.neighbors(v)) {
      if (!pinned_colour[w]) continue;
      auto it = std::lower_bound(list.begin(), list.end(), pinned_colour[w]);
      if (it != list.end() && *it == pinned_colour[w]) list.erase(it);
    }
    induced.push_back(std::move(list));
  }
  out.graph = induced_subgraph(g, out.original);
  out.lists = ListAssignment(std::move(induced));
  return out;
}

Count col_pinned(const Graph& g, const ListAssignment& lists, std::span<const Pin> pins) {
  InducedInstance instance = induce(g, lists, pins);
  if (!instance.pins_consistent) return 0;
  return col(instance.graph, instance.lists);
}

ListAssignment separating_edge_surgery(const Graph& g, const ListAssignment& lists, Edge bridge) {
  require_cover(g, lists);
  const Vertex v1 = bridge.u, v2 = bridge.v;
  if (v1 < 0 || v2 < 0 || v1 >= g.vertex_count() || v2 >= g.vertex_count() || !g.adjacent(v1, v2))
    throw InputError("surgery edge is not an edge of the graph");

  // Side of v2 once the edge is removed.
  std::vector<char> far(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Vertex> stack{v2};
  far[v2] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if ((x == v2 && y == v1) || far[y]) continue;
      far[y] = 1;
      stack.push_back(y);
    }
  }
  if (far[v1]) throw InputError("surgery edge is not a bridge");

  std::vector<ColorList> out = lists.lists();
  auto nested = [&] {
    const auto& a = out[v1];
    const auto& b = out[v2];
    return std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
           std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  while (!nested()) {
    ColorList only1, only2;
    std::set_difference(out[v1].begin(), out[v1].end(), out[v2].begin(), out[v2].end(), std::back_inserter(only1));
    std::set_difference(out[v2].begin(), out[v2].end(), out[v1].begin(), out[v1].end(), std::back_inserter(only2));
    const Color c1 = only1.front(), c2 = only2.front();
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (!far[w]) continue;
      for (Color& c : out[w]) {
        if (c == c1) c = c2;
        else if (c == c2) c = c1;
      }
      std::sort(out[w].begin(), out[w].end());
    }
  }
  return ListAssignment(std::move(out));
}

std::optional<std::vector<Color>> find_coloring(const Graph& g, const ListAssignment& lists) {
  require_cover(g, lists);
  const int n = g.vertex_count();
  std::vector<ColorList> remaining = lists.lists();
  std::vector<Color> colouring(static_cast<std::size_t>(n), 0);

  auto search = [&](auto& self, int coloured) -> bool {
    if (coloured == n) return true;
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (colouring[v]) continue;
      if (pick < 0 || remaining[v].size() < remaining[pick].size() ||
          (remaining[v].size() == remaining[pick].size() && g.degree(v) > g.degree(pick)))
        pick = v;
    }
    const ColorList options = remaining[pick];
    for (Color c : options) {
      std::vector<Vertex> touched;
      bool dead = false;
      for (Vertex w : g.neighbors(pick)) {
        if (colouring[w]) continue;
        auto it = std::lower_bound(remaining[w].begin(), remaining[w].end(), c);
        if (it != remaining[w].end() && *it == c) {
          remaining[w].erase(it);
          touched.push_back(w);
          if (remaining[w].empty()) dead = true;
        }
      }
      colouring[pick] = c;
      if (!dead && self(self, coloured + 1)) return true;
      colouring[pick] = 0;
      for (Vertex w : touched) remaining[w].insert(std::lower_bound(remaining[w].begin(), remaining[w].end(), c), c);
    }
    return false;
  };
  for (const auto& list : remaining)
    if (list.empty()) return std::nullopt;
  if (!search(search, 0)) return std::nullopt;
  return colouring;
}

bool is_proper_coloring(const Graph& g, const ListAssignment& lists, std::span<const Color> coloring) {
  if (static_cast<int>(coloring.size()) != g.vertex_count() || lists.vertex_count() != g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!contains(lists[v], coloring[v])) return false;
  for (Edge e : g.edges())
    if (coloring[e.u] == coloring[e.v]) return false;
  return true;
}

namespace detail {

std::uint64_t count_small(std::span<const std::uint64_t> adjacency, std::span<const std::uint64_t> colour_masks,
                          std::uint64_t active) {
  std::vector<std::uint64_t> masks(colour_masks.begin(), colour_masks.end());
  Counter<std::uint64_t, std::uint64_t> counter(adjacency, std::move(masks),
                                                std::vector<std::uint32_t>(colour_masks.size(), 0));
  return counter.count(active);
}

}  // namespace detail

}  // namespace monophilic
