#pragma once

#include <cstdint>

#include "monophilic/count.hpp"

namespace monophilic {

// Reference counter: walks every function v -> L(v) and checks each edge.
// Shares no code with col(); meant for cross-checking on tiny instances.
std::uint64_t brute_force_col(const Graph& g, const ListAssignment& lists);

}  // namespace monophilic
