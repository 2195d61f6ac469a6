#pragma once

#include "mcut/graph.hpp"

namespace mcut {

/// Maximum-cardinality matching in a general graph (Edmonds' blossom
/// shrinking, O(n^3)). Augmenting searches are seeded from exposed vertices in
/// ascending id, so the result is a deterministic function of the graph.
Matching maximum_matching(const Graph& g);

bool has_perfect_matching(const Graph& g);

}  // namespace mcut
