#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monophilic/count.hpp"

namespace monophilic {

struct SearchOptions {
  // Visited partial assignments allowed per decision before giving up with
  // ResourceExhausted.
  std::uint64_t budget = 100'000'000;
  // Branch-and-bound on partial counts. Disabling never changes answers.
  bool prune = true;
  // Restrict to assignments whose lists are nested across every bridge.
  bool nest_bridges = true;
  // Search each component's core and lift the result to the trees hanging
  // off it. Disabling searches whole components instead.
  bool reduce_cores = true;
  // Worker threads; 0 means hardware concurrency. Results do not depend on it.
  int threads = 1;
};

// Enumeration of list assignments up to colour renaming. Each relabelling
// class is produced exactly once, as its lexicographically least member
// (lists serialized in vertex order).
class CanonicalAssignmentCursor {
 public:
  // Lists of size n on every vertex of g.
  CanonicalAssignmentCursor(const Graph& g, int n, std::uint64_t budget = SearchOptions{}.budget);
  // Lists of size sizes[v] on vertex v.
  explicit CanonicalAssignmentCursor(std::vector<int> sizes, std::uint64_t budget = SearchOptions{}.budget);
  ~CanonicalAssignmentCursor();
  CanonicalAssignmentCursor(CanonicalAssignmentCursor&&) noexcept;
  CanonicalAssignmentCursor& operator=(CanonicalAssignmentCursor&&) noexcept;

  // Next class, or nullopt when exhausted. Throws ResourceExhausted when the
  // budget of visited partial assignments runs out.
  std::optional<ListAssignment> next();
  std::uint64_t nodes_visited() const noexcept;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

// Calls visit once per class of n-list assignments on g; visit returns false
// to stop early.
void enumerate_assignments(const Graph& g, int n, const std::function<bool(const ListAssignment&)>& visit,
                           std::uint64_t budget = SearchOptions{}.budget);

struct MinimumResult {
  Count min_count;
  // Canonical (in vertex order) assignment with col = min_count.
  ListAssignment witness;
  std::uint64_t nodes_visited = 0;
};

// Exact minimum of col(g, L) over n-list assignments L.
MinimumResult min_colorings(const Graph& g, int n, const SearchOptions& options = {});

struct MonophilicVerdict {
  bool monophilic = false;
  // col(g, n) = 0, so the definition holds trivially.
  bool vacuous = false;
  Count uniform_count;
  // Exact minimum when min_exact; otherwise the count of the witness, an
  // upper bound found by a search that stopped at the first improvement.
  Count min_count;
  bool min_exact = false;
  std::optional<ListAssignment> witness;
  std::uint64_t nodes_visited = 0;
};

// Reduces to connected components and their cores, then searches for an
// assignment beating the uniform one.
MonophilicVerdict is_monophilic(const Graph& g, int n, const SearchOptions& options = {});

struct ChoosabilityVerdict {
  bool choosable = false;
  // col(g, witness) = 0, present iff not choosable.
  std::optional<ListAssignment> witness;
  std::uint64_t nodes_visited = 0;
};

ChoosabilityVerdict is_choosable(const Graph& g, int n, const SearchOptions& options = {});

struct ProbeRow {
  int n = 0;
  bool colorable = false;
  // nullopt when the search ran out of budget.
  std::optional<bool> monophilic;
  bool vacuous = false;
  std::uint64_t nodes_visited = 0;
};

struct MonophilicNumberProbe {
  std::vector<ProbeRow> rows;
  // Smallest n with g n-colorable and n-monophilic, if settled within range.
  std::optional<int> first_definition;
  // The smallest n with g n'-monophilic for all n' >= n is at least this.
  // Only a bound: rows beyond n_max are never examined.
  int second_definition_lower_bound = 1;
};

MonophilicNumberProbe monophilic_number_probe(const Graph& g, int n_max, const SearchOptions& options = {});

}  // namespace monophilic
