#include "monophilic/verify.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "monophilic/classify2.hpp"
#include "monophilic/count.hpp"
#include "monophilic/gadgets.hpp"
#include "monophilic/graph_enum.hpp"
#include "monophilic/oracle.hpp"
#include "monophilic/path_cycle.hpp"
#include "monophilic/search.hpp"

namespace monophilic {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& failure) {
    if (!condition && ok) {
      ok = false;
      detail.str("");
      detail << failure;
    }
  }
};

SearchOptions search_options(const VerifyOptions& o) {
  SearchOptions s;
  s.threads = o.threads;
  return s;
}

std::string str(const Count& c) { return c.str(); }

Check counting_oracle(const VerifyOptions& o) {
  Check c;
  std::mt19937_64 rng(o.seed);
  int compared = 0;
  for (int t = 0; t < 200 && c.ok; ++t) {
    const int v = std::uniform_int_distribution<int>(1, 6)(rng);
    const Graph g = random_connected_graph(v, 0.4, rng);
    const int universe = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<ColorList> lists;
    for (int i = 0; i < v; ++i) {
      ColorList list;
      for (int colour = 1; colour <= universe; ++colour)
        if (std::bernoulli_distribution(0.55)(rng)) list.push_back(colour);
      lists.push_back(list);
    }
    const ListAssignment l(lists);
    const Count fast = col(g, l);
    const std::uint64_t slow = brute_force_col(g, l);
    c.require(fast == slow, "instance " + std::to_string(t) + ": engine " + str(fast) + " vs enumeration " +
                                std::to_string(slow));
    ++compared;
  }
  if (c.ok) c.detail << compared << " random instances agree with full enumeration";
  return c;
}

Check path_formulas(const VerifyOptions& o) {
  Check c;
  auto type_a = [&](int k, int n) {
    Count value = type_a_count(k, n);
    if (o.corrupt_path_formula && k == 3 && n == 3) value += 1;
    return value;
  };
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= 8; ++k) {
      const Graph p = build_path(k);
      const Count a = col(p, make_path_assignment(k, n, PathListKind::TypeA));
      const Count b = col(p, make_path_assignment(k, n, PathListKind::TypeB));
      c.require(a == type_a(k, n), "A(" + std::to_string(k) + "," + std::to_string(n) + ") = " +
                                       str(type_a(k, n)) + " but the path has " + str(a) + " colorings");
      c.require(b == type_b_count(k, n), "B(" + std::to_string(k) + "," + std::to_string(n) + ") = " +
                                             str(type_b_count(k, n)) + " but the path has " + str(b) +
                                             " colorings");
    }
  }
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= 12; ++k) {
      const Count a = type_a(k, n), b = type_b_count(k, n);
      const std::string at = "(k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
      c.require(a - b == (k % 2 == 0 ? 1 : -1), "A - B != (-1)^k at " + at);
      c.require(a == type_a_count_by_recurrence(k, n) && b == type_b_count_by_recurrence(k, n),
                "closed form and recurrence differ at " + at);
      if (k >= 2) {
        c.require(a == (n - 1) * type_b_count(k - 1, n), "A_k != (n-1) B_{k-1} at " + at);
        c.require(b == type_a(k - 1, n) + (n - 2) * type_b_count(k - 1, n),
                  "B_k != A_{k-1} + (n-2) B_{k-1} at " + at);
      }
    }
  }
  if (c.ok) c.detail << "closed forms, recurrences and path counts agree (k <= 12, n <= 5)";
  return c;
}

Check cycles(const VerifyOptions& o) {
  Check c;
  std::uint64_t nodes = 0;
  auto run = [&](int k, int n) {
    const Graph g = build_cycle(k);
    const MonophilicVerdict v = is_monophilic(g, n, search_options(o));
    nodes += v.nodes_visited;
    const std::string at = "C_" + std::to_string(k) + ", n=" + std::to_string(n);
    c.require(v.monophilic, at + " reported not monophilic");
    c.require(v.uniform_count == cycle_uniform_count(k, n),
              at + ": uniform count " + str(v.uniform_count) + " != n A_{k-2} = " + str(cycle_uniform_count(k, n)));
  };
  for (int k = 3; k <= 7; ++k) run(k, 2);
  for (int k = 3; k <= 5; ++k) run(k, 3);
  if (c.ok) c.detail << "C_3..C_7 at n=2 and C_3..C_5 at n=3 monophilic; " << nodes << " search nodes";
  return c;
}

Check chordal(const VerifyOptions& o) {
  Check c;
  std::mt19937_64 rng(o.seed + 4);
  for (int t = 0; t < 50 && c.ok; ++t) {
    const int v = std::uniform_int_distribution<int>(1, 6)(rng);
    const Graph g = random_chordal_graph(v, rng);
    c.require(is_chordal(g), "generator produced a non-chordal graph");
    const MinimumResult m = min_colorings(g, 2, search_options(o));
    const Count uniform = col_uniform(g, 2);
    c.require(m.min_count == uniform, "chordal graph " + std::to_string(t) + ": minimum " + str(m.min_count) +
                                          " < uniform " + str(uniform));
  }
  if (c.ok) c.detail << "50 random chordal graphs: minimum over 2-list assignments = col(G,2)";
  return c;
}

Check characterizations(const VerifyOptions& o) {
  Check c;
  const auto graphs = connected_graphs_up_to(6);
  for (std::size_t i = 0; i < graphs.size() && c.ok; ++i) {
    const Graph& g = graphs[i];
    const bool mono = is_monophilic(g, 2, search_options(o)).monophilic;
    const bool choosable = is_choosable(g, 2, search_options(o)).choosable;
    c.require(mono == classify_2_monophilic(g), "monophilicity disagrees on graph " + std::to_string(i));
    c.require(choosable == classify_2_choosable(g), "choosability disagrees on graph " + std::to_string(i));
  }
  if (c.ok) c.detail << graphs.size() << " connected graphs (<= 6 vertices): classifier agrees with search";
  return c;
}

Check k23(const VerifyOptions& o) {
  Check c;
  const Graph g = build_complete_bipartite(2, 3);
  const MinimumResult m = min_colorings(g, 2, search_options(o));
  const Count uniform = col_uniform(g, 2);
  c.require(m.min_count == 2 && uniform == 2, "min " + str(m.min_count) + ", uniform " + str(uniform));
  if (c.ok) c.detail << "min " << m.min_count << " = uniform " << uniform;
  return c;
}

Check thetas(const VerifyOptions& o) {
  Check c;
  const Graph t224 = build_theta(2, 2, 4);
  const MinimumResult m = min_colorings(t224, 2, search_options(o));
  const Count uniform = col_uniform(t224, 2);
  c.require(m.min_count == 1 && uniform == 2 && col(t224, m.witness) == 1,
            "theta(2,2,4): min " + str(m.min_count) + ", uniform " + str(uniform));
  for (int mm = 2; mm <= 3; ++mm) {
    const MonophilicVerdict v = is_monophilic(build_theta(2, 2, 2 * mm), 2, search_options(o));
    c.require(!v.monophilic && v.witness && col(build_theta(2, 2, 2 * mm), *v.witness) < v.uniform_count,
              "theta(2,2," + std::to_string(2 * mm) + ") not refuted");
    c.require(is_monophilic(build_cycle(2 * mm), 2, search_options(o)).monophilic,
              "C_" + std::to_string(2 * mm) + " not monophilic");
  }
  c.require(is_monophilic(build_complete_bipartite(2, 3), 2, search_options(o)).monophilic, "K_{2,3} not monophilic");
  if (c.ok)
    c.detail << "theta(2,2,4) min 1 < 2; theta(2,2,4), theta(2,2,6) not monophilic; C_4, C_6, K_{2,3} monophilic";
  return c;
}

Check remark_assignment(const VerifyOptions& o) {
  Check c;
  for (int k : {4, 6}) {
    const Graph g = build_cycle(k);
    std::vector<ColorList> lists(static_cast<std::size_t>(k), ColorList{2, 3});
    lists[0] = lists[1] = {1, 2};
    const Count value = col(g, ListAssignment(lists));
    const MinimumResult m = min_colorings(g, 2, search_options(o));
    c.require(value == 2 && m.min_count == 2,
              "C_" + std::to_string(k) + ": assignment " + str(value) + ", minimum " + str(m.min_count));
  }
  if (c.ok) c.detail << "C_4 and C_6: count 2 = minimum";
  return c;
}

Check gadgets(const VerifyOptions&) {
  Check c;
  const GadgetInstance l0 = build_L0(2);
  c.require(col(l0.graph, l0.lists) == 0, "col(K_{2,4}, L_0) != 0");
  const Count x1 = col(l0.graph, build_Lj(2, 1)), x2 = col(l0.graph, build_Lj(2, 2));
  c.require(x1 == x2 && x1 > 0, "x differs between L_1 and L_2");
  const HCountReport r = verify_H_counts(2);
  c.require(r.forced_colours_verified, "forced colours not confirmed");
  c.require(r.factored_count == r.x_power && r.direct_count == r.x_power,
            "col(H_3, L) = " + str(r.direct_count) + " != x^4 = " + str(r.x_power));
  c.require(r.family_verified && r.family_size > r.x_power, "uniform coloring family not verified");
  c.require(r.uniform_count >= r.family_size, "col(H_3, 3) below the family size");
  c.require(r.holds, "H_3 count check failed");
  if (c.ok)
    c.detail << "x = " << r.x << ", p = " << r.p << ", col(H_3,L) = " << r.direct_count << " < 2^p = " << r.family_size
             << " <= col(H_3,3) = " << r.uniform_count;
  return c;
}

Check l0_uniqueness(const VerifyOptions&) {
  Check c;
  const L0UniquenessReport r = verify_L0_uniqueness(2);
  c.require(r.holds, std::to_string(r.zero_classes - r.equivalent_to_L0) + " zero classes not equivalent to L_0");
  if (c.ok)
    c.detail << r.classes << " classes of 2-lists on K_{2,4}; all " << r.zero_classes
             << " with no coloring are equivalent to L_0 (lists of size exactly 2 only)";
  return c;
}

Check mechanism(const VerifyOptions& o) {
  Check c;
  const MechanismReport r = verify_H_choosable_mechanism(2, 500, o.seed);
  c.require(r.holds, "max bad apex colours " + std::to_string(r.max_bad_colours) + ", greedy " +
                         std::to_string(r.greedy_successes) + "/" + std::to_string(r.greedy_attempts));
  if (c.ok)
    c.detail << r.apex_assignments << " apexed assignments, at most " << r.max_bad_colours
             << " bad apex colour; greedy coloring succeeded " << r.greedy_successes << "/" << r.greedy_attempts;
  return c;
}

Check products(const VerifyOptions& o) {
  Check c;
  const Graph grid = cartesian_product(build_path(2), build_path(3));
  c.require(grid.vertex_count() == 12 && grid.edge_count() == 17, "P_2 x P_3 has the wrong size");
  const MonophilicVerdict v = is_monophilic(grid, 2, search_options(o));
  c.require(!v.monophilic && v.witness && col(grid, *v.witness) < v.uniform_count,
            "P_2 x P_3 not refuted");
  SearchOptions exhaustive = search_options(o);
  exhaustive.reduce_cores = false;
  exhaustive.nest_bridges = false;
  c.require(is_monophilic(build_vertex(), 2, exhaustive).monophilic, "P_0 not monophilic");
  for (int k = 1; k <= 6; ++k)
    c.require(is_monophilic(build_path(k), 2, exhaustive).monophilic, "P_" + std::to_string(k) + " not monophilic");
  if (c.ok)
    c.detail << "P_2 x P_3: witness with " << col(grid, *v.witness) << " < " << v.uniform_count
             << " colorings; paths with <= 7 vertices monophilic";
  return c;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  bool full_only;
  Check (*run)(const VerifyOptions&);
};

const Criterion kCriteria[] = {
    {"counting oracle", 10, false, counting_oracle},
    {"path formulas", 5, false, path_formulas},
    {"cycles monophilic", 300, false, cycles},
    {"chordal graphs monophilic", 300, false, chordal},
    {"2-characterizations", 1800, true, characterizations},
    {"K_{2,3} minimum", 10, false, k23},
    {"theta(2,2,2m)", 120, false, thetas},
    {"non-uniform minimizer on even cycles", 10, false, remark_assignment},
    {"H_3 gadgets", 300, false, gadgets},
    {"L_0 uniqueness", 1800, true, l0_uniqueness},
    {"H_3 choosability mechanism", 300, false, mechanism},
    {"products and paths", 300, false, products},
};

}  // namespace

std::string format_result(const CriterionResult& r) {
  const char* status = r.status == Status::Pass ? "PASS" : r.status == Status::Fail ? "FAIL" : "SKIP";
  char time[64];
  std::snprintf(time, sizeof time, "%.2f s", r.seconds);
  std::string line = "criterion " + std::to_string(r.id) + " [" + r.name + "]: " + status + " (" + r.detail;
  if (r.status != Status::Skipped) line += std::string(r.detail.empty() ? "" : "; ") + time;
  return line + ")";
}

CriterionResult run_criterion(int id, const VerifyOptions& options) {
  if (id < 1 || id > 12) throw std::out_of_range("criterion ids are 1..12");
  const Criterion& spec = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = spec.name;
  r.limit_seconds = spec.limit_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    Check c = spec.run(options);
    r.status = c.ok ? Status::Pass : Status::Fail;
    r.detail = c.detail.str();
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.status == Status::Pass && r.seconds > r.limit_seconds) {
    r.status = Status::Fail;
    r.detail += "; exceeded the " + std::to_string(static_cast<int>(r.limit_seconds)) + " s limit";
  }
  return r;
}

std::vector<CriterionResult> run_suite(const VerifyOptions& options,
                                       const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 12; ++id) {
    CriterionResult r;
    if (options.suite == Suite::Fast && kCriteria[id - 1].full_only) {
      r.id = id;
      r.name = kCriteria[id - 1].name;
      r.limit_seconds = kCriteria[id - 1].limit_seconds;
      r.detail = "full suite only";
    } else {
      r = run_criterion(id, options);
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace monophilic
