#include "monophilic/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "monophilic/canonical.hpp"
#include "monophilic/errors.hpp"
#include "prefix_walker.hpp"

namespace monophilic {

namespace {

using detail::PrefixWalker;
using detail::Step;

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
// Node allowance for the short-prefix zero hunt that precedes the main
// search in Minimize and Improve modes.
constexpr std::uint64_t kZeroHuntAllowance = std::uint64_t{1} << 21;

enum class Mode { Minimize, Improve, FindZero };

void require_list_size(int n) {
  if (n < 1) throw InputError("list size must be >= 1");
}

// The search counts partial assignments with 64-bit masks and 64-bit counts.
void require_fast_path(int vertices, int n) {
  bool fits = vertices <= 64 && n * vertices <= 64;
  std::uint64_t classes_bound = 1;
  for (int i = 0; fits && i < vertices; ++i) {
    if (classes_bound > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n)) fits = false;
    classes_bound *= static_cast<std::uint64_t>(n);
  }
  if (!fits) {
    throw ResourceExhausted("instance too large for exhaustive search (" + std::to_string(vertices) +
                                " vertices, lists of size " + std::to_string(n) + ")",
                            0);
  }
}

ColorList first_colours(int n) {
  ColorList out(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) out[c] = c + 1;
  return out;
}

// A connected graph with its vertices in search order.
struct Prepared {
  int vertices = 0;
  int n = 0;
  std::vector<Vertex> order;  // search position -> vertex of the input graph
  std::vector<std::uint64_t> adjacency;
  std::vector<std::vector<int>> nest_with;
  // tail[d]: guaranteed extensions of any coloring of positions < d.
  std::vector<std::uint64_t> tail;
  std::uint64_t uniform = 0;
};

// Maximum cardinality search from a vertex of maximum degree; keeps every
// prefix connected and closes cycles as early as possible.
std::vector<Vertex> search_order(const Graph& g) {
  const int v_count = g.vertex_count();
  std::vector<int> weight(static_cast<std::size_t>(v_count), 0);
  std::vector<char> placed(static_cast<std::size_t>(v_count), 0);
  std::vector<Vertex> order;
  for (int step = 0; step < v_count; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < v_count; ++v) {
      if (placed[v]) continue;
      if (best < 0 || weight[v] > weight[best] || (weight[v] == weight[best] && g.degree(v) > g.degree(best)))
        best = v;
    }
    placed[best] = 1;
    order.push_back(best);
    for (Vertex w : g.neighbors(best)) ++weight[w];
  }
  return order;
}

Prepared prepare(const Graph& g, int n, bool nest_bridges) {
  require_fast_path(g.vertex_count(), n);
  Prepared p;
  p.vertices = g.vertex_count();
  p.n = n;
  p.order = search_order(g);
  std::vector<int> position(static_cast<std::size_t>(p.vertices));
  for (int d = 0; d < p.vertices; ++d) position[p.order[d]] = d;

  p.adjacency.assign(static_cast<std::size_t>(p.vertices), 0);
  std::vector<int> earlier(static_cast<std::size_t>(p.vertices), 0);
  for (const Edge& e : g.edges()) {
    const int a = position[e.u], b = position[e.v];
    p.adjacency[a] |= std::uint64_t{1} << b;
    p.adjacency[b] |= std::uint64_t{1} << a;
    ++earlier[std::max(a, b)];
  }
  p.nest_with.resize(static_cast<std::size_t>(p.vertices));
  if (nest_bridges) {
    for (const Edge& e : bridges(g)) {
      const int a = position[e.u], b = position[e.v];
      p.nest_with[std::max(a, b)].push_back(std::min(a, b));
    }
  }
  p.tail.assign(static_cast<std::size_t>(p.vertices) + 1, 1);
  for (int d = p.vertices - 1; d >= 0; --d)
    p.tail[d] = p.tail[d + 1] * static_cast<std::uint64_t>(std::max(0, n - earlier[d]));
  p.uniform = col_uniform(g, n).convert_to<std::uint64_t>();
  return p;
}

struct Outcome {
  bool found = false;
  std::uint64_t count = kNone;
  std::vector<ColorList> lists;  // by search position
};

class Search {
 public:
  Search(const Prepared& p, Mode mode, const SearchOptions& options, std::atomic<std::uint64_t>& nodes)
      : p_(p), mode_(mode), options_(options), nodes_(nodes) {}

  Outcome run() {
    if (options_.prune && p_.vertices > 1) {
      const std::uint64_t allowance = mode_ == Mode::FindZero ? kNone : kZeroHuntAllowance;
      std::uint64_t spent = 0;
      for (int t = 1; t < p_.vertices && spent < allowance; ++t) {
        Outcome zero = zero_hunt(t, allowance, spent);
        if (zero.found) return zero;
      }
    }
    return main_phase();
  }

 private:
  struct Local {
    std::uint64_t best = kNone;
    Outcome outcome;
  };

  PrefixWalker make_walker() const {
    return PrefixWalker(std::vector<int>(static_cast<std::size_t>(p_.vertices), p_.n), p_.nest_with);
  }

  void tick() {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > options_.budget) {
      throw ResourceExhausted("search budget of " + std::to_string(options_.budget) + " nodes exhausted",
                              nodes_.load());
    }
  }

  std::uint64_t prefix_count(const PrefixWalker& w) const {
    const int d = w.depth();
    const std::uint64_t active = d >= 64 ? kNone : (std::uint64_t{1} << d) - 1;
    return detail::count_small(p_.adjacency, w.masks(), active);
  }

  Outcome capture(const PrefixWalker& w, std::uint64_t count) const {
    Outcome out;
    out.found = true;
    out.count = count;
    out.lists = w.snapshot();
    while (static_cast<int>(out.lists.size()) < p_.vertices) out.lists.push_back(first_colours(p_.n));
    return out;
  }

  // Looks for a prefix of length t whose colorings already number zero.
  Outcome zero_hunt(int t, std::uint64_t allowance, std::uint64_t& spent) {
    PrefixWalker w = make_walker();
    Outcome out;
    detail::walk(w, t, [&](PrefixWalker& walker) {
      if (++spent > allowance) return Step::Stop;
      tick();
      const std::uint64_t c = prefix_count(walker);
      if (c == 0) {
        out = capture(walker, 0);
        return Step::Stop;
      }
      if (walker.depth() < t && p_.tail[walker.depth()] == 0) return Step::Descend;
      return Step::Skip;
    });
    return out;
  }

  // Work items are admissible prefixes, in lexicographic order. Every class
  // extends exactly one item.
  std::vector<std::vector<ColorList>> make_items(int threads) {
    std::vector<std::vector<ColorList>> items{{}};
    if (threads <= 1) return items;
    const std::size_t wanted = static_cast<std::size_t>(threads) * 32;
    for (int s = 1; s < p_.vertices && items.size() < wanted; ++s) {
      std::vector<std::vector<ColorList>> next;
      PrefixWalker w = make_walker();
      detail::walk(w, s, [&](PrefixWalker& walker) {
        tick();
        if (options_.prune && statically_pruned(walker, prefix_count(walker))) return Step::Skip;
        if (walker.depth() == s) {
          next.push_back(walker.snapshot());
          return Step::Skip;
        }
        return Step::Descend;
      });
      items = std::move(next);
    }
    return items;
  }

  // Pruning that does not depend on what other items have found.
  bool statically_pruned(const PrefixWalker& w, std::uint64_t c) const {
    if (c == 0) return false;
    const std::uint64_t lb = c * p_.tail[w.depth()];
    switch (mode_) {
      case Mode::Minimize: return lb > p_.uniform;
      case Mode::Improve: return lb >= p_.uniform;
      case Mode::FindZero: return lb > 0;
    }
    return false;
  }

  Step visit(PrefixWalker& w, std::size_t item, Local& local) {
    if (item > final_item_.load(std::memory_order_relaxed) || failed_.load(std::memory_order_relaxed))
      return Step::Stop;
    tick();
    const int d = w.depth();
    const std::uint64_t c = prefix_count(w);
    if (c == 0) {
      local.best = 0;
      local.outcome = capture(w, 0);
      finish(item);
      lower_global(0);
      return Step::Stop;
    }
    if (d == p_.vertices) {
      if (mode_ == Mode::FindZero) return Step::Skip;
      const std::uint64_t bar = mode_ == Mode::Improve ? p_.uniform : local.best;
      if (c < bar) {
        local.best = c;
        local.outcome = capture(w, c);
        lower_global(c);
        if (mode_ == Mode::Improve) {
          finish(item);
          return Step::Stop;
        }
      }
      return Step::Skip;
    }
    if (options_.prune) {
      const std::uint64_t lb = c * p_.tail[d];
      switch (mode_) {
        case Mode::Minimize:
          if (lb > global_best_.load(std::memory_order_relaxed) || lb >= local.best) return Step::Skip;
          break;
        case Mode::Improve:
          if (lb >= p_.uniform) return Step::Skip;
          break;
        case Mode::FindZero:
          if (lb > 0) return Step::Skip;
          break;
      }
    }
    return Step::Descend;
  }

  void finish(std::size_t item) {
    std::size_t current = final_item_.load();
    while (item < current && !final_item_.compare_exchange_weak(current, item)) {
    }
  }

  void lower_global(std::uint64_t c) {
    std::uint64_t current = global_best_.load();
    while (c < current && !global_best_.compare_exchange_weak(current, c)) {
    }
  }

  void process(PrefixWalker& w, std::size_t index, const std::vector<ColorList>& prefix, Local& local) {
    auto step = [&](PrefixWalker& walker) { return visit(walker, index, local); };
    w.assign(prefix);
    if (!prefix.empty() && step(w) != Step::Descend) return;
    detail::walk(w, p_.vertices, step);
  }

  Outcome main_phase() {
    int threads = options_.threads;
    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const auto items = make_items(threads);
    std::vector<Local> results(items.size());
    global_best_ = p_.uniform;
    final_item_ = kNone;
    std::atomic<std::size_t> next_item{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
      PrefixWalker w = make_walker();
      try {
        while (!failed_.load()) {
          const std::size_t i = next_item.fetch_add(1);
          if (i >= items.size() || i > final_item_.load()) break;
          process(w, i, items[i], results[i]);
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed_ = true;
      }
    };
    const int spawned = std::min<int>(threads, static_cast<int>(items.size()));
    if (spawned <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < spawned; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    // Lowest count wins, ties go to the earliest item: identical to a
    // sequential run.
    Outcome best;
    for (std::size_t i = 0; i < results.size() && i <= final_item_.load(); ++i) {
      const Outcome& o = results[i].outcome;
      if (o.found && (!best.found || o.count < best.count)) best = o;
    }
    return best;
  }

  const Prepared& p_;
  Mode mode_;
  SearchOptions options_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<std::uint64_t> global_best_{kNone};
  std::atomic<std::size_t> final_item_{kNone};
  std::atomic<bool> failed_{false};
};

// The graph reduced to one connected component's core.
struct CoreReduction {
  std::vector<Vertex> component;  // ids in the full graph
  Graph core;
  std::vector<Vertex> core_ids;   // core vertex -> id in the full graph
  // Every non-core vertex of the component paired with its neighbour one
  // step closer to the core, parents first.
  std::vector<std::pair<Vertex, Vertex>> tree_parent;
};

CoreReduction reduce(const Graph& g, const std::vector<Vertex>& component, bool to_core) {
  CoreReduction r;
  r.component = component;
  const Graph sub = induced_subgraph(g, component);
  std::vector<Vertex> kept(component.size());
  std::iota(kept.begin(), kept.end(), 0);
  if (to_core) kept = core_vertices(sub);
  for (Vertex v : kept) r.core_ids.push_back(component[v]);
  r.core = induced_subgraph(sub, kept);

  std::vector<char> seen(static_cast<std::size_t>(sub.vertex_count()), 0);
  std::vector<Vertex> queue(kept.begin(), kept.end());
  for (Vertex v : kept) seen[v] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : sub.neighbors(queue[head])) {
      if (seen[w]) continue;
      seen[w] = 1;
      queue.push_back(w);
      r.tree_parent.emplace_back(component[w], component[queue[head]]);
    }
  }
  return r;
}

std::size_t tree_size(const CoreReduction& r) { return r.tree_parent.size(); }

// Writes the outcome's lists onto the component in `lists`; tree vertices
// copy their parent's list, which multiplies the core count by (n-1) each.
void lift(const CoreReduction& r, const Prepared& p, const Outcome& o, std::vector<ColorList>& lists) {
  for (int d = 0; d < p.vertices; ++d) lists[r.core_ids[p.order[d]]] = o.lists[d];
  for (const auto& [child, parent] : r.tree_parent) lists[child] = lists[parent];
}

Count power(std::uint64_t base, std::size_t exponent) {
  Count out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::vector<std::vector<Vertex>> components_by_size(const Graph& g) {
  auto comps = connected_components(g);
  std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return comps;
}

}  // namespace

struct CanonicalAssignmentCursor::State {
  explicit State(std::vector<int> sizes, std::uint64_t budget_)
      : walker(std::move(sizes)), budget(budget_) {}

  bool backtrack() {
    while (walker.depth() > 0) {
      if (walker.advance()) {
        tick();
        return true;
      }
    }
    return false;
  }

  void tick() {
    if (++nodes > budget)
      throw ResourceExhausted("enumeration budget of " + std::to_string(budget) + " nodes exhausted", nodes);
  }

  PrefixWalker walker;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool started = false;
  bool done = false;
};

CanonicalAssignmentCursor::CanonicalAssignmentCursor(const Graph& g, int n, std::uint64_t budget)
    : CanonicalAssignmentCursor((require_list_size(n), std::vector<int>(static_cast<std::size_t>(g.vertex_count()), n)),
                                budget) {}

CanonicalAssignmentCursor::CanonicalAssignmentCursor(std::vector<int> sizes, std::uint64_t budget)
    : state_(std::make_unique<State>(std::move(sizes), budget)) {}

CanonicalAssignmentCursor::~CanonicalAssignmentCursor() = default;
CanonicalAssignmentCursor::CanonicalAssignmentCursor(CanonicalAssignmentCursor&&) noexcept = default;
CanonicalAssignmentCursor& CanonicalAssignmentCursor::operator=(CanonicalAssignmentCursor&&) noexcept = default;

std::optional<ListAssignment> CanonicalAssignmentCursor::next() {
  State& s = *state_;
  if (s.done) return std::nullopt;
  if (s.started && !s.backtrack()) {
    s.done = true;
    return std::nullopt;
  }
  s.started = true;
  while (s.walker.depth() < s.walker.length()) {
    if (s.walker.push()) {
      s.tick();
      continue;
    }
    if (!s.backtrack()) {
      s.done = true;
      return std::nullopt;
    }
  }
  return ListAssignment(s.walker.snapshot());
}

std::uint64_t CanonicalAssignmentCursor::nodes_visited() const noexcept { return state_->nodes; }

void enumerate_assignments(const Graph& g, int n, const std::function<bool(const ListAssignment&)>& visit,
                           std::uint64_t budget) {
  CanonicalAssignmentCursor cursor(g, n, budget);
  while (auto lists = cursor.next())
    if (!visit(*lists)) return;
}

MinimumResult min_colorings(const Graph& g, int n, const SearchOptions& options) {
  require_list_size(n);
  std::atomic<std::uint64_t> nodes{0};
  std::vector<ColorList> lists(static_cast<std::size_t>(g.vertex_count()), first_colours(n));
  Count total = 1;
  for (const auto& comp : components_by_size(g)) {
    const CoreReduction r = reduce(g, comp, options.reduce_cores);
    const Prepared p = prepare(r.core, n, options.nest_bridges);
    Outcome o = Search(p, Mode::Minimize, options, nodes).run();
    if (!o.found) {
      o.found = true;
      o.count = p.uniform;
      o.lists.assign(static_cast<std::size_t>(p.vertices), first_colours(n));
    }
    lift(r, p, o, lists);
    total *= Count(o.count) * power(static_cast<std::uint64_t>(n - 1), tree_size(r));
    if (total == 0) break;
  }
  MinimumResult out;
  out.min_count = total;
  out.witness = canonical_form(ListAssignment(std::move(lists)));
  out.nodes_visited = nodes.load();
  return out;
}

MonophilicVerdict is_monophilic(const Graph& g, int n, const SearchOptions& options) {
  require_list_size(n);
  MonophilicVerdict out;
  out.uniform_count = col_uniform(g, n);
  if (out.uniform_count == 0) {
    out.monophilic = true;
    out.vacuous = true;
    out.min_count = 0;
    out.min_exact = true;
    return out;
  }
  // Here every list size admits a proper coloring, so n = 1 means no edges
  // and every assignment has exactly one coloring.
  std::atomic<std::uint64_t> nodes{0};
  std::vector<ColorList> lists(static_cast<std::size_t>(g.vertex_count()), first_colours(n));
  for (const auto& comp : components_by_size(g)) {
    const CoreReduction r = reduce(g, comp, options.reduce_cores);
    if (r.core.vertex_count() == 1) continue;
    const Prepared p = prepare(r.core, n, options.nest_bridges);
    const Outcome o = Search(p, Mode::Improve, options, nodes).run();
    if (!o.found) continue;
    lift(r, p, o, lists);
    ListAssignment witness(std::move(lists));
    out.monophilic = false;
    out.min_count = col(g, witness);
    out.min_exact = false;
    out.witness = canonical_form(witness);
    out.nodes_visited = nodes.load();
    return out;
  }
  out.monophilic = true;
  out.min_count = out.uniform_count;
  out.min_exact = true;
  out.nodes_visited = nodes.load();
  return out;
}

ChoosabilityVerdict is_choosable(const Graph& g, int n, const SearchOptions& options) {
  require_list_size(n);
  ChoosabilityVerdict out;
  if (n == 1) {
    out.choosable = g.edge_count() == 0;
    if (!out.choosable) out.witness = ListAssignment::uniform(g.vertex_count(), 1);
    return out;
  }
  // With n >= 2 a vertex of degree 1 can always be colored last, so only
  // the cores matter.
  std::atomic<std::uint64_t> nodes{0};
  std::vector<ColorList> lists(static_cast<std::size_t>(g.vertex_count()), first_colours(n));
  for (const auto& comp : components_by_size(g)) {
    const CoreReduction r = reduce(g, comp, options.reduce_cores);
    if (r.core.vertex_count() == 1) continue;
    const Prepared p = prepare(r.core, n, options.nest_bridges);
    const Outcome o = Search(p, Mode::FindZero, options, nodes).run();
    if (!o.found) continue;
    lift(r, p, o, lists);
    out.choosable = false;
    out.witness = canonical_form(ListAssignment(std::move(lists)));
    out.nodes_visited = nodes.load();
    return out;
  }
  out.choosable = true;
  out.nodes_visited = nodes.load();
  return out;
}

MonophilicNumberProbe monophilic_number_probe(const Graph& g, int n_max, const SearchOptions& options) {
  if (n_max < 1) throw InputError("n_max must be >= 1");
  MonophilicNumberProbe out;
  bool settled = true;
  for (int n = 1; n <= n_max; ++n) {
    ProbeRow row;
    row.n = n;
    row.colorable = col_uniform(g, n) > 0;
    try {
      const MonophilicVerdict v = is_monophilic(g, n, options);
      row.monophilic = v.monophilic;
      row.vacuous = v.vacuous;
      row.nodes_visited = v.nodes_visited;
    } catch (const ResourceExhausted& e) {
      row.nodes_visited = e.nodes_visited();
    }
    if (settled && !out.first_definition) {
      if (!row.monophilic) settled = false;
      else if (row.colorable && *row.monophilic) out.first_definition = n;
    }
    if (row.monophilic == false) out.second_definition_lower_bound = n + 1;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace monophilic
