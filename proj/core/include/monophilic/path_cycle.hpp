#pragma once

#include <optional>

#include "monophilic/count.hpp"

namespace monophilic {

// (n, n-1)-list assignments on a path of length k: n-lists inside,
// (n-1)-lists at the two ends, every end list inside the common interior list.
// TypeA: the end lists coincide. TypeB: they differ.
enum class PathListKind { TypeA, TypeB };

// Colorings of a length-k path from a type A assignment,
// (n-1)/n * ((n-1)^(k+1) + (-1)^k). Requires k >= 1, n >= 2.
Count type_a_count(int k, int n);
// Type B count, A_k - (-1)^k.
Count type_b_count(int k, int n);

// Same values through A_1 = (n-1)(n-2), B_1 = (n-2)^2 + (n-1),
// A_k = (n-1) B_{k-1}, B_k = A_{k-1} + (n-2) B_{k-1}.
Count type_a_count_by_recurrence(int k, int n);
Count type_b_count_by_recurrence(int k, int n);

// Concrete assignment on build_path(k): interior {1..n}, end 0 gets
// {1..n-1}, end k gets {1..n-1} (TypeA) or {2..n} (TypeB).
ListAssignment make_path_assignment(int k, int n, PathListKind kind);

// Kind of an (n, n-1)-list assignment on build_path(k), nullopt if it is
// neither type (or not an (n, n-1)-assignment at all).
std::optional<PathListKind> classify_path_assignment(const ListAssignment& lists, int n);

// col(C_k, n) = n * A_{k-2}. Requires k >= 3, n >= 2.
Count cycle_uniform_count(int k, int n);

}  // namespace monophilic
