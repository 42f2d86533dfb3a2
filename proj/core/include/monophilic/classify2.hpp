#pragma once

#include "monophilic/graph.hpp"

namespace monophilic {

// Structural tests for list size 2. Both throw InputError on disconnected
// or empty graphs.

// True iff the core is a single vertex, a cycle or K_{2,3}, or g has an odd
// cycle.
bool classify_2_monophilic(const Graph& g);

// True iff the core is a single vertex, an even cycle, or theta(2, 2, 2m).
bool classify_2_choosable(const Graph& g);

}  // namespace monophilic
