#pragma once

#include <optional>
#include <vector>

#include "purelab/graph.hpp"
#include "purelab/orbit.hpp"
#include "purelab/word.hpp"

namespace purelab {

// Legal parity moves: complement at a white vertex (flipping neighbour
// colours) or at an edge joining two black vertices (the word uvu).
struct ParityMove {
    enum Kind { WhiteVertex, BlackEdge } kind;
    int u;
    int v; // BlackEdge only
};

// Even degree white, odd degree black.
Graph natural_colouring(const Graph& g);

// One complementation letter with the bicoloured rule: a white u flips the
// colours of N(u), a black u leaves colours alone.
Graph parity_letter(const Graph& g, int u);
Graph parity_apply(const Graph& g, const Word& s);

std::vector<ParityMove> legal_parity_moves(const Graph& g);
Graph parity_complement(const Graph& g, const ParityMove& m);

// Complementation with respect to the couple {u, v}: u black, v adjacent.
Graph couple_complement(const Graph& g, int u, int v);

struct ParityClass {
    struct Entry {
        CanonKey key;
        Graph rep;          // as first reached
        int parent = -1;    // index into entries, -1 for seed
        ParityMove via{ParityMove::WhiteVertex, -1, -1};
    };
    std::vector<Entry> entries;            // discovery order
    std::vector<int> sorted_by_key;        // indices, ascending key

    Word word_to(int index) const; // parity word from the seed to entries[index].rep
};

ParityClass enumerate_parity_class(const Graph& g, Budget budget = {}, int jobs = 1);

// A with: A all black, independent, dominating (a black anticlique).
std::optional<VertexSet> find_black_anticlique(const Graph& g);

struct PurityReport {
    bool pure;
    size_t class_size;       // classes seen (full count when pure)
    int witness_index = -1;  // entry index with an anticlique
    VertexSet anticlique;    // on the witness rep labels
    Word witness_word;       // parity word from the seed
};
PurityReport is_pure(const Graph& g, Budget budget = {}, int jobs = 1);

// G S for a complementation set S (throws NotAComplementationSet).
Graph complement_with_set(const Graph& g, VertexSet S);
std::optional<Word> find_set_word(const Graph& g, VertexSet S); // reduced parity word with support S

// G^{-1} = G V(G); uncoloured inputs get their natural colouring first.
Graph invert(const Graph& g);
bool is_invertible(const Graph& g);

} // namespace purelab
