#include "monophilic/gadgets.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "monophilic/canonical.hpp"
#include "monophilic/errors.hpp"
#include "monophilic/search.hpp"

namespace monophilic {

namespace {

int int_power(int base, int exponent) {
  long long out = 1;
  for (int i = 0; i < exponent; ++i) {
    out *= base;
    if (out > (1 << 20)) throw InputError("gadget parameter too large");
  }
  return static_cast<int>(out);
}

std::vector<ColorList> L0_lists(int n, int shift) {
  const int b_count = int_power(n, n);
  std::vector<ColorList> lists;
  for (int i = 0; i < n; ++i) {
    ColorList list;
    for (int c = 1; c <= n; ++c) list.push_back(shift + i * n + c);
    lists.push_back(list);
  }
  for (int k = 0; k < b_count; ++k) {
    ColorList list(static_cast<std::size_t>(n));
    int rest = k;
    for (int i = n - 1; i >= 0; --i) {
      list[i] = shift + i * n + rest % n + 1;
      rest /= n;
    }
    lists.push_back(list);
  }
  return lists;
}

ColorList range_list(int from, int to) {
  ColorList out;
  for (int c = from; c <= to; ++c) out.push_back(c);
  return out;
}

ColorList random_list(int size, int universe, std::mt19937_64& rng) {
  ColorList all = range_list(1, universe);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(size));
  std::sort(all.begin(), all.end());
  return all;
}

// Every automorphism of a small graph, by brute force over permutations.
std::vector<std::vector<Vertex>> automorphisms(const Graph& g) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Vertex>> out;
  do {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (!g.adjacent(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

GadgetInstance build_L0(int n) {
  if (n < 1) throw InputError("L_0 needs n >= 1");
  const int b_count = int_power(n, n);
  return {build_complete_bipartite(n, b_count), ListAssignment(L0_lists(n, 0))};
}

ListAssignment build_Lj(int n, int j, int shift) {
  if (n < 1) throw InputError("L_j needs n >= 1");
  if (j < 1 || j > n) throw InputError("L_j needs 1 <= j <= n");
  if (shift < n) throw InputError("the shifted L_0 must avoid the colours 1..n");
  auto lists = L0_lists(n, shift);
  for (auto& list : lists) list.push_back(j);
  return ListAssignment(std::move(lists));
}

Graph build_apexed(int n) { return build_complete_tripartite(n, int_power(n, n), 1); }

HGraph build_H(int n) {
  if (n < 2) throw InputError("H_{n+1} is undefined for n = 1: no p satisfies 1^p > x");
  const int b_count = int_power(n, n);
  const GadgetInstance base = build_L0(n);
  HGraphLayout layout;
  layout.n = n;
  layout.x = col(base.graph, build_Lj(n, 1));
  Count bound = 1;
  for (int i = 0; i < n * n; ++i) bound *= layout.x;
  Count power = 1;
  while (power <= bound) {
    power *= n;
    ++layout.p;
  }

  int next = 0;
  for (int i = 0; i < n; ++i) layout.v.push_back(next++);
  for (int k = 0; k < layout.p; ++k) layout.w.push_back(next++);
  layout.copies.assign(static_cast<std::size_t>(n), std::vector<HGraphLayout::Copy>(static_cast<std::size_t>(n)));
  std::vector<Edge> edges;
  for (Vertex v : layout.v)
    for (Vertex w : layout.w) edges.push_back({v, w});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto& copy = layout.copies[i][j];
      for (int a = 0; a < n; ++a) copy.a.push_back(next++);
      for (int b = 0; b < b_count; ++b) copy.b.push_back(next++);
      for (Vertex a : copy.a)
        for (Vertex b : copy.b) edges.push_back({a, b});
      for (Vertex a : copy.a) edges.push_back({layout.v[i], a});
      for (Vertex b : copy.b) edges.push_back({layout.v[i], b});
    }
  }
  return {Graph(next, edges), std::move(layout)};
}

ListAssignment build_lemma8_assignment(const HGraphLayout& layout) {
  const int n = layout.n;
  const int total = static_cast<int>(layout.v.size() + layout.w.size()) +
                    n * n * (n + int_power(n, n));
  std::vector<ColorList> lists(static_cast<std::size_t>(total));
  for (Vertex w : layout.w) lists[w] = range_list(n + 1, 2 * n + 1);
  for (int i = 0; i < n; ++i) {
    lists[layout.v[i]] = range_list(1, n);
    lists[layout.v[i]].push_back(n + i + 1);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const ListAssignment lj = build_Lj(n, j + 1, 2 * n + 1);
      const auto& copy = layout.copies[i][j];
      for (int a = 0; a < n; ++a) lists[copy.a[a]] = lj[a];
      for (std::size_t b = 0; b < copy.b.size(); ++b) lists[copy.b[b]] = lj[n + static_cast<int>(b)];
    }
  }
  return ListAssignment(std::move(lists));
}

std::vector<Color> bad_apex_colours(const Graph& apexed, const ListAssignment& lists) {
  const Vertex apex = apexed.vertex_count() - 1;
  std::vector<Color> bad;
  for (Color c : lists[apex]) {
    const Pin pin{apex, c};
    if (col_pinned(apexed, lists, std::span<const Pin>(&pin, 1)) == 0) bad.push_back(c);
  }
  return bad;
}

HCountReport verify_H_counts(int n) {
  const HGraph h = build_H(n);
  const HGraphLayout& layout = h.layout;
  const ListAssignment lists = build_lemma8_assignment(layout);
  HCountReport r;
  r.x = layout.x;
  r.p = layout.p;
  r.x_power = 1;
  for (int i = 0; i < n * n; ++i) r.x_power *= layout.x;

  // Forced colours: v_i = n+i and w_k = 2n+1 in every coloring.
  std::vector<Pin> forced;
  bool forced_ok = true;
  auto only_colour = [&](Vertex v, Color keep) {
    for (Color c : lists[v]) {
      if (c == keep) continue;
      const Pin pin{v, c};
      if (col_pinned(h.graph, lists, std::span<const Pin>(&pin, 1)) != 0) forced_ok = false;
    }
    forced.push_back({v, keep});
  };
  for (int i = 0; i < n; ++i) only_colour(layout.v[i], n + i + 1);
  for (Vertex w : layout.w) only_colour(w, 2 * n + 1);
  r.forced_colours_verified = forced_ok;

  // With v and w fixed the copies are independent.
  const InducedInstance rest = induce(h.graph, lists, forced);
  r.factored_count = rest.pins_consistent ? Count(1) : Count(0);
  for (const auto& comp : connected_components(rest.graph)) {
    std::vector<ColorList> part;
    for (Vertex v : comp) part.push_back(rest.lists[v]);
    r.factored_count *= col(induced_subgraph(rest.graph, comp), ListAssignment(std::move(part)));
  }
  r.direct_count = col(h.graph, lists);

  // The family: w from [n], every v gets n+1, each copy 1 on its a side and
  // 2 on its b side.
  const ListAssignment uniform = ListAssignment::uniform(h.graph.vertex_count(), n + 1);
  std::vector<Color> gamma(static_cast<std::size_t>(h.graph.vertex_count()), 0);
  for (Vertex w : layout.w) gamma[w] = 1;
  for (Vertex v : layout.v) gamma[v] = n + 1;
  for (const auto& row : layout.copies) {
    for (const auto& copy : row) {
      for (Vertex a : copy.a) gamma[a] = 1;
      for (Vertex b : copy.b) gamma[b] = 2;
    }
  }
  bool family_ok = is_proper_coloring(h.graph, uniform, gamma);
  // Recolouring a w_k within [n] stays proper when its neighbours are
  // exactly the v_i, which all carry n+1.
  for (Vertex w : layout.w) {
    auto nb = h.graph.neighbors(w);
    family_ok = family_ok && std::vector<Vertex>(nb.begin(), nb.end()) == layout.v;
  }
  r.family_verified = family_ok;
  r.family_size = 1;
  for (int k = 0; k < layout.p; ++k) r.family_size *= n;
  r.uniform_count = col_uniform(h.graph, n + 1);

  r.holds = r.x > 0 && r.forced_colours_verified && r.factored_count == r.x_power &&
            r.direct_count == r.x_power && r.family_verified && r.x_power < r.family_size &&
            r.family_size <= r.uniform_count;
  return r;
}

L0UniquenessReport verify_L0_uniqueness(int n) {
  if (n < 1) throw InputError("n must be >= 1");
  if (n > 2) throw ResourceExhausted("L_0 uniqueness is only checked exhaustively for n <= 2", 0);
  const GadgetInstance l0 = build_L0(n);
  std::set<std::vector<ColorList>> images;
  for (const auto& phi : automorphisms(l0.graph)) {
    std::vector<ColorList> moved(static_cast<std::size_t>(l0.graph.vertex_count()));
    for (Vertex v = 0; v < l0.graph.vertex_count(); ++v) moved[v] = l0.lists[phi[v]];
    images.insert(canonical_form(ListAssignment(std::move(moved))).lists());
  }
  L0UniquenessReport r;
  enumerate_assignments(l0.graph, n, [&](const ListAssignment& lists) {
    ++r.classes;
    if (col(l0.graph, lists) == 0) {
      ++r.zero_classes;
      if (images.count(canonical_form(lists).lists())) ++r.equivalent_to_L0;
    }
    return true;
  });
  r.holds = r.zero_classes > 0 && r.zero_classes == r.equivalent_to_L0;
  return r;
}

MechanismReport verify_H_choosable_mechanism(int n, int trials, std::uint64_t seed) {
  if (n != 2) throw InputError("the H mechanism check supports n = 2 only");
  MechanismReport r;
  std::mt19937_64 rng(seed);
  const Graph apexed = build_apexed(n);
  const int size = apexed.vertex_count();

  auto record = [&](const ListAssignment& lists) {
    const auto bad = bad_apex_colours(apexed, lists);
    ++r.apex_assignments;
    r.max_bad_colours = std::max(r.max_bad_colours, static_cast<int>(bad.size()));
    return bad;
  };

  r.adversarial_exactly_one = true;
  for (int j = 1; j <= n; ++j) {
    auto lists = build_Lj(n, j).lists();
    lists.push_back(range_list(1, n + 1));
    const auto bad = record(ListAssignment(lists));
    r.adversarial_exactly_one = r.adversarial_exactly_one && bad == std::vector<Color>{j};

    // The same assignment under a random renaming of its colours.
    std::vector<Color> rename(static_cast<std::size_t>(4 * n * n + 2));
    std::iota(rename.begin(), rename.end(), 0);
    std::shuffle(rename.begin() + 1, rename.end(), rng);
    std::vector<ColorList> renamed;
    for (const auto& list : lists) {
      ColorList out;
      for (Color c : list) out.push_back(rename[c]);
      renamed.push_back(out);
    }
    const auto renamed_bad = record(ListAssignment(renamed));
    r.adversarial_exactly_one = r.adversarial_exactly_one && renamed_bad == std::vector<Color>{rename[j]};
  }
  r.uniform_none = record(ListAssignment::uniform(size, n + 1)).empty();
  for (int t = 0; t < trials; ++t) {
    const int universe = std::uniform_int_distribution<int>(n + 1, 3 * n + 2)(rng);
    std::vector<ColorList> lists;
    for (int v = 0; v < size; ++v) lists.push_back(random_list(n + 1, universe, rng));
    record(ListAssignment(lists));
  }

  // Greedy completion on H.
  const HGraph h = build_H(n);
  const HGraphLayout& layout = h.layout;
  auto greedy = [&](const ListAssignment& lists) {
    ++r.greedy_attempts;
    std::vector<Color> gamma(static_cast<std::size_t>(h.graph.vertex_count()), 0);
    for (int i = 0; i < n; ++i) {
      std::set<Color> bad;
      std::vector<std::vector<Vertex>> copy_vertices;
      for (int j = 0; j < n; ++j) {
        const auto& copy = layout.copies[i][j];
        std::vector<Vertex> ids(copy.a);
        ids.insert(ids.end(), copy.b.begin(), copy.b.end());
        ids.push_back(layout.v[i]);
        std::vector<ColorList> part;
        for (Vertex v : ids) part.push_back(lists[v]);
        for (Color c : bad_apex_colours(induced_subgraph(h.graph, ids), ListAssignment(part))) bad.insert(c);
        copy_vertices.push_back(ids);
      }
      const auto& options = lists[layout.v[i]];
      auto it = std::find_if(options.begin(), options.end(), [&](Color c) { return !bad.count(c); });
      if (it == options.end()) return;
      gamma[layout.v[i]] = *it;
      for (const auto& ids : copy_vertices) {
        const Graph g = induced_subgraph(h.graph, ids);
        std::vector<ColorList> part;
        for (Vertex v : ids) part.push_back(lists[v]);
        part.back() = {*it};
        const auto coloring = find_coloring(g, ListAssignment(part));
        if (!coloring) return;
        for (std::size_t k = 0; k + 1 < ids.size(); ++k) gamma[ids[k]] = (*coloring)[k];
      }
    }
    for (Vertex w : layout.w) {
      for (Color c : lists[w]) {
        bool clash = false;
        for (Vertex v : layout.v) clash = clash || gamma[v] == c;
        if (!clash) {
          gamma[w] = c;
          break;
        }
      }
      if (!gamma[w]) return;
    }
    if (is_proper_coloring(h.graph, lists, gamma)) ++r.greedy_successes;
  };
  greedy(build_lemma8_assignment(layout));
  greedy(ListAssignment::uniform(h.graph.vertex_count(), n + 1));
  for (int t = 0; t < trials; ++t) {
    const int universe = std::uniform_int_distribution<int>(n + 1, 3 * n + 2)(rng);
    std::vector<ColorList> lists;
    for (int v = 0; v < h.graph.vertex_count(); ++v) lists.push_back(random_list(n + 1, universe, rng));
    greedy(ListAssignment(lists));
  }

  r.holds = r.max_bad_colours <= 1 && r.adversarial_exactly_one && r.uniform_none &&
            r.greedy_successes == r.greedy_attempts;
  return r;
}

}  // namespace monophilic
