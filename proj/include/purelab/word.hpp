#pragma once

#include <optional>
#include <vector>

#include "purelab/graph.hpp"

namespace purelab {

// Complementation word: sequence of vertex ids, applied left to right.
using Word = std::vector<int>;

// G u = G triangle K_{N(u)}. Colours, if any, are carried over untouched;
// the colour-aware variant lives in the parity module.
Graph local_complement(const Graph& g, int u);
Graph apply_word(const Graph& g, const Word& s);

// Closed form for G u v u along an edge [u,v] (no intermediate graphs).
Graph edge_triple_complement(const Graph& g, int u, int v);

// Block structure of a reduced word: single vertices or brackets [uv] = uvu
// with the edge present at application time; no letter in two blocks.
struct Block {
    int u;
    int v; // -1 for a single-vertex block; otherwise block = u v u
    bool is_bracket() const { return v >= 0; }
};
std::optional<std::vector<Block>> parse_reduced(const Graph& g, const Word& s);
bool is_reduced(const Graph& g, const Word& s);
Word blocks_to_word(const std::vector<Block>& blocks);

// Equivalent reduced word with support inside V(s); if `priority` is given
// and survives, it ends up in position 1 or 2.
Word reduce_word(const Graph& g, const Word& s, std::optional<int> priority = std::nullopt);

// Reorders a reduced word into component groups (connected in g), singles
// before brackets within each group.
Word split_word_by_components(const Graph& g, const Word& s);

} // namespace purelab
