#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "purelab/graph.hpp"
#include "purelab/orbit.hpp"

namespace purelab {

// Bipartition with both sides >= 2 and a complete bipartite frontier.
struct Split {
    VertexSet v1;
    VertexSet v2;
};

// Bicoloured graph whose root carries no colour. The root is always the
// last vertex (index g.n - 1); colours cover every other vertex.
struct RootedGraph {
    Graph g;
    int root;
};

std::vector<Split> find_splits(const Graph& g);

std::pair<RootedGraph, RootedGraph> induced_rooted_graphs(const Graph& g, const Split& s);

// rw: root white; rb: root black; rc: complement at the root as if white,
// then colour it black (equal to rb when the root is isolated).
struct RootGraphs {
    Graph rw, rb, rc;
};
RootGraphs root_graphs(const RootedGraph& rg);

// lw: delete the root; lb: complement as if white, then delete;
// lc_v: root black, complement with {root, v}, delete the root.
struct LeafGraphs {
    Graph lw, lb;
    std::optional<Graph> lc; // absent when the root is isolated
    int lc_vertex = -1;
};
LeafGraphs leaf_graphs(const RootedGraph& rg, std::optional<int> v = std::nullopt);

// The six root/leaf pairs along a split; with no cross edge the rc/lc pairs
// collapse to a single empty-graph pair.
std::vector<std::pair<Graph, Graph>> essential_decompositions(const Graph& g, const Split& s);

// Certificate tree for the sufficient purity condition: a split whose
// essential decomposition has two pure members, down to base classes.
struct PurityCert {
    enum Kind { BaseK1, BasePentagon, BaseSmall, BySplit, ByComponent } kind;
    CanonKey key;
    Split split{};
    int pair_index = -1; // which of the six decompositions
    std::unique_ptr<PurityCert> left, right;
};
std::optional<PurityCert> purity_by_decomposition(const Graph& g, Budget budget = {});
std::string format_cert(const PurityCert& cert);

VertexSet critical_vertices(const Graph& g, Budget budget = {});
VertexSet tight_vertices(const Graph& g, Budget budget = {});

} // namespace purelab
