#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "purelab/graph.hpp"

namespace purelab {

struct Budget {
    size_t max_states = 5'000'000;
};

// Complementation class of a graph under single-vertex local complements.
// Iso mode deduplicates by CanonKey; labeled mode keeps exact labeled
// graphs (for distance queries on the complementation graph).
struct Orbit {
    std::vector<std::pair<CanonKey, Graph>> reps; // sorted by key
    std::optional<std::vector<Graph>> labeled;    // discovery order
};

Orbit enumerate_complementation_class(const Graph& g, bool labeled, Budget budget = {},
                                      int jobs = 1);

// Diameter of the complementation graph (vertices = labeled class members,
// edges = one local complementation).
int complementation_diameter(const Graph& g, Budget budget = {});

// True iff the edge complement of g lies in g's complementation class,
// decided by the mod-2 strong regularity criterion.
bool complement_reachable(const Graph& g);
// Independent oracle: labeled BFS membership search.
bool complement_reachable_bfs(const Graph& g, Budget budget = {});

} // namespace purelab
