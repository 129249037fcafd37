#pragma once

#include <random>
#include <vector>

#include "purelab/graph.hpp"

namespace purelab::test {

// Erdos-Renyi-ish random graph, optionally with random colours.
Graph random_graph(std::mt19937& rng, int n, double p = 0.5, bool coloured = false);

// All labeled graphs on n vertices (n small).
std::vector<Graph> all_graphs(int n);
std::vector<Graph> all_connected_graphs(int n);
// All bicolourings of a graph.
std::vector<Graph> all_colourings(const Graph& g);

// Brute-force colour-preserving isomorphism (independent of canonical_form).
bool brute_isomorphic(const Graph& a, const Graph& b);
// Brute-force colour-preserving automorphisms as permutation vectors.
std::vector<std::vector<int>> automorphisms(const Graph& g);

Graph permuted(const Graph& g, const std::vector<int>& perm); // image vertex perm[v]

} // namespace purelab::test
