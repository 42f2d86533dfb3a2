#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "monophilic/canonical.hpp"
#include "monophilic/errors.hpp"
#include "monophilic/graph_enum.hpp"
#include "monophilic/oracle.hpp"
#include "monophilic/path_cycle.hpp"
#include "monophilic/search.hpp"

using namespace monophilic;

namespace {

// Minimum of col over every raw n-list assignment from the colours 1..n|V|.
std::uint64_t raw_minimum(const Graph& g, int n) {
  const int universe = n * g.vertex_count();
  std::vector<ColorList> pool;
  std::vector<bool> pick(static_cast<std::size_t>(universe), false);
  std::fill(pick.begin(), pick.begin() + n, true);
  do {
    ColorList s;
    for (int c = 0; c < universe; ++c)
      if (pick[static_cast<std::size_t>(c)]) s.push_back(c + 1);
    pool.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::vector<std::size_t> index(static_cast<std::size_t>(g.vertex_count()), 0);
  std::uint64_t best = UINT64_MAX;
  while (true) {
    std::vector<ColorList> lists;
    for (std::size_t i : index) lists.push_back(pool[i]);
    best = std::min(best, brute_force_col(g, ListAssignment(lists)));
    std::size_t d = 0;
    while (d < index.size() && ++index[d] == pool.size()) index[d++] = 0;
    if (d == index.size()) break;
  }
  return best;
}

Count class_minimum(const Graph& g, int n) {
  std::optional<Count> best;
  enumerate_assignments(g, n, [&](const ListAssignment& l) {
    const Count c = col(g, l);
    if (!best || c < *best) best = c;
    return true;
  });
  return *best;
}

SearchOptions with_threads(int threads) {
  SearchOptions o;
  o.threads = threads;
  return o;
}

}  // namespace

TEST(MinColorings, Examples) {
  const MinimumResult c4 = min_colorings(build_cycle(4), 2);
  EXPECT_EQ(c4.min_count, 2);
  const MinimumResult theta = min_colorings(build_theta(2, 2, 4), 2);
  EXPECT_EQ(theta.min_count, 1);
  EXPECT_EQ(col(build_theta(2, 2, 4), theta.witness), 1);
  EXPECT_TRUE(is_canonical(theta.witness));
  EXPECT_EQ(min_colorings(build_complete(3), 2).min_count, 0);
}

TEST(MinColorings, MatchesRawEnumerationOnTinyGraphs) {
  for (const Graph& g : connected_graphs_up_to(4)) {
    const MinimumResult r = min_colorings(g, 2);
    EXPECT_EQ(r.min_count, raw_minimum(g, 2));
    EXPECT_EQ(col(g, r.witness), r.min_count);
  }
  for (const Graph& g : connected_graphs_up_to(3)) EXPECT_EQ(min_colorings(g, 3).min_count, raw_minimum(g, 3));
}

TEST(MinColorings, MatchesClassEnumerationAndPruningIsSound) {
  SearchOptions plain;
  plain.prune = false;
  plain.nest_bridges = false;
  plain.reduce_cores = false;
  for (const Graph& g : connected_graphs_up_to(5)) {
    const Count expected = class_minimum(g, 2);
    const MinimumResult pruned = min_colorings(g, 2);
    const MinimumResult unpruned = min_colorings(g, 2, plain);
    EXPECT_EQ(pruned.min_count, expected);
    EXPECT_EQ(unpruned.min_count, expected);
    EXPECT_EQ(col(g, pruned.witness), expected);
    EXPECT_EQ(col(g, unpruned.witness), expected);
  }
}

TEST(MinColorings, RegressionSetWithAndWithoutPruning) {
  const std::vector<std::pair<Graph, int>> cases{
      {build_theta(2, 2, 4), 2}, {build_complete_bipartite(2, 3), 2}, {build_cycle(5), 3},
      {build_complete_bipartite(2, 4), 2}, {cartesian_product(build_path(1), build_path(2)), 2},
      {build_theta(1, 3, 3), 2}};
  SearchOptions off;
  off.prune = false;
  for (const auto& [g, n] : cases) {
    const MinimumResult a = min_colorings(g, n);
    const MinimumResult b = min_colorings(g, n, off);
    EXPECT_EQ(a.min_count, b.min_count);
    EXPECT_EQ(a.witness, b.witness);
  }
}

TEST(MinColorings, ThreadCountDoesNotChangeResults) {
  const std::vector<std::pair<Graph, int>> cases{
      {build_theta(2, 2, 4), 2}, {build_complete_bipartite(2, 3), 2}, {build_cycle(5), 3},
      {build_complete_bipartite(2, 4), 2}, {cartesian_product(build_path(1), build_path(2)), 2}};
  for (const auto& [g, n] : cases) {
    const MinimumResult one = min_colorings(g, n, with_threads(1));
    const MinimumResult four = min_colorings(g, n, with_threads(4));
    EXPECT_EQ(one.min_count, four.min_count);
    EXPECT_EQ(one.witness, four.witness);
    const MonophilicVerdict v1 = is_monophilic(g, n, with_threads(1));
    const MonophilicVerdict v4 = is_monophilic(g, n, with_threads(4));
    EXPECT_EQ(v1.monophilic, v4.monophilic);
    EXPECT_EQ(v1.min_count, v4.min_count);
    EXPECT_EQ(v1.witness, v4.witness);
  }
}

TEST(IsMonophilic, Examples) {
  const MonophilicVerdict c5 = is_monophilic(build_cycle(5), 2);
  EXPECT_TRUE(c5.monophilic);
  EXPECT_TRUE(c5.vacuous);
  EXPECT_EQ(c5.uniform_count, 0);

  const MonophilicVerdict theta = is_monophilic(build_theta(2, 2, 4), 2);
  EXPECT_FALSE(theta.monophilic);
  EXPECT_EQ(theta.uniform_count, 2);
  EXPECT_EQ(theta.min_count, 1);
  ASSERT_TRUE(theta.witness.has_value());
  EXPECT_EQ(col(build_theta(2, 2, 4), *theta.witness), theta.min_count);

  const MonophilicVerdict k23 = is_monophilic(build_complete_bipartite(2, 3), 2);
  EXPECT_TRUE(k23.monophilic);
  EXPECT_FALSE(k23.vacuous);
  EXPECT_EQ(k23.uniform_count, 2);
  EXPECT_EQ(k23.min_count, 2);
  EXPECT_TRUE(k23.min_exact);
}

TEST(IsMonophilic, VerdictInvariants) {
  for (const Graph& g : connected_graphs_up_to(5)) {
    const MonophilicVerdict v = is_monophilic(g, 2);
    EXPECT_EQ(v.uniform_count, col_uniform(g, 2));
    EXPECT_EQ(v.monophilic, v.uniform_count <= v.min_count);
    EXPECT_EQ(v.witness.has_value(), !v.monophilic);
    if (v.witness) {
      EXPECT_EQ(col(g, *v.witness), v.min_count);
      EXPECT_LT(v.min_count, v.uniform_count);
    }
  }
}

TEST(IsMonophilic, ReductionsAgreeWithWholeGraphSearch) {
  SearchOptions whole;
  whole.reduce_cores = false;
  whole.nest_bridges = false;
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    const Graph g = random_connected_graph(3 + static_cast<int>(rng() % 4), 0.2, rng);
    EXPECT_EQ(is_monophilic(g, 2).monophilic, is_monophilic(g, 2, whole).monophilic);
    EXPECT_EQ(min_colorings(g, 2).min_count, min_colorings(g, 2, whole).min_count);
  }
  const Graph two = disjoint_union(build_theta(2, 2, 4), build_cycle(4));
  EXPECT_FALSE(is_monophilic(two, 2).monophilic);
  EXPECT_EQ(min_colorings(two, 2).min_count, 2);
  EXPECT_TRUE(is_monophilic(disjoint_union(build_cycle(4), build_path(2)), 2).monophilic);
}

TEST(IsMonophilic, CyclesAtTwoAndThree) {
  for (int k = 3; k <= 7; ++k) {
    for (int n = 2; n <= 3; ++n) {
      const MonophilicVerdict v = is_monophilic(build_cycle(k), n);
      EXPECT_TRUE(v.monophilic) << k << " " << n;
      EXPECT_EQ(v.uniform_count, n * type_a_count(k - 2, n));
    }
  }
}

TEST(IsMonophilic, ChordalGraphsUpToSix) {
  int chordal = 0;
  for (const Graph& g : connected_graphs_up_to(6)) {
    if (!is_chordal(g)) continue;
    ++chordal;
    EXPECT_TRUE(is_monophilic(g, 2).monophilic);
    EXPECT_TRUE(is_monophilic(g, 3).monophilic);
  }
  EXPECT_GT(chordal, 50);
}

TEST(IsMonophilic, GridIsNotButPathsAre) {
  const Graph grid = cartesian_product(build_path(2), build_path(3));
  const MonophilicVerdict v = is_monophilic(grid, 2);
  EXPECT_FALSE(v.monophilic);
  EXPECT_EQ(v.uniform_count, 2);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_LT(col(grid, *v.witness), 2);

  SearchOptions whole;
  whole.reduce_cores = false;
  whole.nest_bridges = false;
  for (int k = 1; k <= 6; ++k) EXPECT_TRUE(is_monophilic(build_path(k), 2, whole).monophilic);
}

TEST(IsChoosable, Examples) {
  EXPECT_TRUE(is_choosable(build_cycle(4), 2).choosable);
  const ChoosabilityVerdict c3 = is_choosable(build_cycle(3), 2);
  EXPECT_FALSE(c3.choosable);
  ASSERT_TRUE(c3.witness.has_value());
  EXPECT_EQ(*c3.witness, ListAssignment::uniform(3, 2));
  const ChoosabilityVerdict k24 = is_choosable(build_complete_bipartite(2, 4), 2);
  EXPECT_FALSE(k24.choosable);
  ASSERT_TRUE(k24.witness.has_value());
  EXPECT_EQ(col(build_complete_bipartite(2, 4), *k24.witness), 0);
  EXPECT_TRUE(is_choosable(build_vertex(), 1).choosable);
  EXPECT_FALSE(is_choosable(build_path(1), 1).choosable);
}

TEST(IsChoosable, WitnessesHaveNoColoring) {
  for (const Graph& g : connected_graphs_up_to(5)) {
    const ChoosabilityVerdict v = is_choosable(g, 2);
    EXPECT_EQ(v.choosable, class_minimum(g, 2) > 0);
    if (v.witness) EXPECT_EQ(col(g, *v.witness), 0);
  }
}

TEST(Search, BudgetExhaustion) {
  SearchOptions tiny;
  tiny.budget = 10;
  EXPECT_THROW(min_colorings(build_theta(2, 2, 4), 2, tiny), ResourceExhausted);
  EXPECT_THROW(is_monophilic(build_complete_bipartite(2, 3), 2, tiny), ResourceExhausted);
  try {
    is_monophilic(build_complete_bipartite(10, 10), 7);
    FAIL() << "expected ResourceExhausted";
  } catch (const ResourceExhausted& e) {
    EXPECT_EQ(e.nodes_visited(), 0u);
  }
  EXPECT_THROW(is_monophilic(build_cycle(4), 0), InputError);
}

TEST(Probe, Examples) {
  const MonophilicNumberProbe tree = monophilic_number_probe(build_path(3), 3);
  ASSERT_EQ(tree.rows.size(), 3u);
  for (const ProbeRow& row : tree.rows) EXPECT_EQ(row.monophilic, true);
  EXPECT_EQ(tree.first_definition, 2);

  const MonophilicNumberProbe theta = monophilic_number_probe(build_theta(2, 2, 4), 2);
  ASSERT_EQ(theta.rows.size(), 2u);
  EXPECT_FALSE(theta.rows[0].colorable);
  EXPECT_EQ(theta.rows[0].monophilic, true);
  EXPECT_TRUE(theta.rows[0].vacuous);
  EXPECT_TRUE(theta.rows[1].colorable);
  EXPECT_EQ(theta.rows[1].monophilic, false);
  EXPECT_EQ(theta.first_definition, std::nullopt);
  EXPECT_GE(theta.second_definition_lower_bound, 3);

  const MonophilicNumberProbe c4 = monophilic_number_probe(build_cycle(4), 3);
  EXPECT_EQ(c4.rows[1].monophilic, true);
  EXPECT_EQ(c4.rows[2].monophilic, true);
  EXPECT_EQ(c4.first_definition, 2);
}

TEST(Probe, UnknownRowsUnderTinyBudget) {
  SearchOptions tiny;
  tiny.budget = 5;
  const MonophilicNumberProbe p = monophilic_number_probe(build_theta(2, 2, 4), 2, tiny);
  ASSERT_EQ(p.rows.size(), 2u);
  EXPECT_EQ(p.rows[1].monophilic, std::nullopt);
  EXPECT_EQ(p.first_definition, std::nullopt);
}
