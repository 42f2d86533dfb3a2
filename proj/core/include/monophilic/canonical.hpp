#pragma once

#include "monophilic/count.hpp"

namespace monophilic {

// Canonical representative of the relabelling class of `lists`: among all
// bijective colour renamings, the one whose serialization (lists of vertices
// 0, 1, ... concatenated, each sorted) is lexicographically least. The
// result always uses exactly the colours 1..k in order of first appearance.
ListAssignment canonical_form(const ListAssignment& lists);

inline bool is_canonical(const ListAssignment& lists) { return canonical_form(lists) == lists; }

inline bool equivalent_under_relabelling(const ListAssignment& a, const ListAssignment& b) {
  return a.vertex_count() == b.vertex_count() && canonical_form(a) == canonical_form(b);
}

}  // namespace monophilic
