#include "monophilic/path_cycle.hpp"

#include <algorithm>

#include "monophilic/errors.hpp"

namespace monophilic {

namespace {

void require_parameters(int k, int n) {
  if (k < 1) throw InputError("path length must be >= 1");
  if (n < 2) throw InputError("(n, n-1)-list assignments need n >= 2");
}

Count sign(int k) { return k % 2 == 0 ? Count(1) : Count(-1); }

}  // namespace

Count type_a_count(int k, int n) {
  require_parameters(k, n);
  Count numerator = boost::multiprecision::pow(Count(n - 1), static_cast<unsigned>(k + 1)) + sign(k);
  // (n-1)^(k+1) + (-1)^k = (-1)^(k+1) + (-1)^k = 0 (mod n).
  return (n - 1) * numerator / n;
}

Count type_b_count(int k, int n) { return type_a_count(k, n) - sign(k); }

namespace {

std::pair<Count, Count> recurrence(int k, int n) {
  require_parameters(k, n);
  Count a = Count(n - 1) * (n - 2);
  Count b = Count(n - 2) * (n - 2) + (n - 1);
  for (int step = 2; step <= k; ++step) {
    Count next_a = (n - 1) * b;
    Count next_b = a + (n - 2) * b;
    a = std::move(next_a);
    b = std::move(next_b);
  }
  return {a, b};
}

}  // namespace

Count type_a_count_by_recurrence(int k, int n) { return recurrence(k, n).first; }
Count type_b_count_by_recurrence(int k, int n) { return recurrence(k, n).second; }

ListAssignment make_path_assignment(int k, int n, PathListKind kind) {
  require_parameters(k, n);
  ColorList interior(n), low(n - 1), high(n - 1);
  for (int c = 1; c <= n; ++c) interior[c - 1] = c;
  for (int c = 1; c < n; ++c) {
    low[c - 1] = c;
    high[c - 1] = c + 1;
  }
  std::vector<ColorList> lists(static_cast<std::size_t>(k + 1), interior);
  lists.front() = low;
  lists.back() = kind == PathListKind::TypeA ? low : high;
  return ListAssignment(std::move(lists));
}

std::optional<PathListKind> classify_path_assignment(const ListAssignment& lists, int n) {
  const int vertices = lists.vertex_count();
  if (vertices < 2 || n < 2) return std::nullopt;
  const ColorList& first = lists[0];
  const ColorList& last = lists[vertices - 1];
  if (static_cast<int>(first.size()) != n - 1 || static_cast<int>(last.size()) != n - 1) return std::nullopt;

  ColorList interior;
  if (vertices == 2) {
    std::set_union(first.begin(), first.end(), last.begin(), last.end(), std::back_inserter(interior));
    if (static_cast<int>(interior.size()) > n) return std::nullopt;
  } else {
    interior = lists[1];
    if (static_cast<int>(interior.size()) != n) return std::nullopt;
    for (int v = 2; v + 1 < vertices; ++v)
      if (lists[v] != interior) return std::nullopt;
    if (!std::includes(interior.begin(), interior.end(), first.begin(), first.end()) ||
        !std::includes(interior.begin(), interior.end(), last.begin(), last.end()))
      return std::nullopt;
  }
  return first == last ? PathListKind::TypeA : PathListKind::TypeB;
}

Count cycle_uniform_count(int k, int n) {
  if (k < 3) throw InputError("cycle length must be >= 3");
  return n * type_a_count(k - 2, n);
}

}  // namespace monophilic
