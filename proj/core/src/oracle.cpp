#include "monophilic/oracle.hpp"

#include "monophilic/errors.hpp"

namespace monophilic {

std::uint64_t brute_force_col(const Graph& g, const ListAssignment& lists) {
  const int v_count = g.vertex_count();
  if (lists.vertex_count() != v_count) throw InputError("list assignment does not match the graph");
  for (const auto& list : lists.lists())
    if (list.empty()) return 0;
  std::vector<std::size_t> digit(static_cast<std::size_t>(v_count), 0);
  std::uint64_t total = 0;
  while (true) {
    bool proper = true;
    for (const Edge& e : g.edges()) {
      if (lists[e.u][digit[e.u]] == lists[e.v][digit[e.v]]) {
        proper = false;
        break;
      }
    }
    if (proper) ++total;
    int v = 0;
    while (v < v_count && ++digit[v] == lists[v].size()) digit[v++] = 0;
    if (v == v_count) return total;
  }
}

}  // namespace monophilic
