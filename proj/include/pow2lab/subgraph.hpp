#pragma once

#include "pow2lab/graph.hpp"

namespace pow2lab {

// True iff an injective vertex map from h into g carries every edge of h to
// an edge of g (non-induced subgraph containment).
bool contains_subgraph(const Graph& g, const Graph& h);

}  // namespace pow2lab
