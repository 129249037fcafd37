#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "purelab/error.hpp"

namespace purelab {

inline constexpr int kMaxVertices = 64;

enum class Colour : uint8_t { White = 0, Black = 1 };

// Subset of 0..n-1 as a bit mask.
struct VertexSet {
    uint64_t bits = 0;

    VertexSet() = default;
    explicit VertexSet(uint64_t b) : bits(b) {}
    static VertexSet full(int n) { return VertexSet(n >= 64 ? ~0ULL : (1ULL << n) - 1); }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    bool contains(int v) const { return (bits >> v) & 1; }
    void add(int v) { bits |= 1ULL << v; }
    void remove(int v) { bits &= ~(1ULL << v); }
    int count() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    bool operator==(const VertexSet&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        uint64_t b = bits;
        while (b) {
            out.push_back(std::countr_zero(b));
            b &= b - 1;
        }
        return out;
    }
};

// Simple labeled graph on vertices 0..n-1 with bit-row adjacency and an
// optional {black, white} colouring. Adjacency stays symmetric and loopless.
struct Graph {
    int n = 0;
    std::vector<uint64_t> adj;        // adj[u] bit v
    std::optional<uint64_t> blacks;   // bit v set = black; nullopt = uncoloured

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_, 0) {
        if (n_ < 0 || n_ > kMaxVertices) fail(ErrorKind::OutOfRange, "vertex count out of range");
    }

    bool coloured() const { return blacks.has_value(); }
    bool edge(int u, int v) const { return (adj[u] >> v) & 1; }
    uint64_t neighbours(int u) const { return adj[u]; }
    int degree(int u) const { return std::popcount(adj[u]); }
    uint64_t vertex_mask() const { return n >= 64 ? ~0ULL : (1ULL << n) - 1; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) fail(ErrorKind::Format, "loops not allowed in simple graphs");
        adj[u] |= 1ULL << v;
        adj[v] |= 1ULL << u;
    }
    void toggle_edge(int u, int v) {
        adj[u] ^= 1ULL << v;
        adj[v] ^= 1ULL << u;
    }
    void check_vertex(int u) const {
        if (u < 0 || u >= n) fail(ErrorKind::OutOfRange, "vertex out of range");
    }

    Colour colour(int u) const { return (*blacks >> u) & 1 ? Colour::Black : Colour::White; }
    bool is_black(int u) const { return coloured() && ((*blacks >> u) & 1); }
    bool is_white(int u) const { return coloured() && !((*blacks >> u) & 1); }
    void set_colour(int u, Colour c) {
        if (!blacks) blacks = 0;
        if (c == Colour::Black)
            *blacks |= 1ULL << u;
        else
            *blacks &= ~(1ULL << u);
    }
    void flip_colours(uint64_t mask) {
        if (blacks) *blacks ^= mask & vertex_mask();
    }

    int edge_count() const {
        int s = 0;
        for (int u = 0; u < n; u++) s += degree(u);
        return s / 2;
    }
    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; u++) {
            uint64_t b = u + 1 >= 64 ? 0 : adj[u] & ~((2ULL << u) - 1); // only v > u
            while (b) {
                int v = std::countr_zero(b);
                b &= b - 1;
                out.push_back({u, v});
            }
        }
        return out;
    }

    bool operator==(const Graph&) const = default;
};

// Canonical encoding of (n, adjacency, colours) up to colour-preserving
// isomorphism; equal keys iff such an isomorphism exists.
using CanonKey = std::string;

CanonKey canonical_form(const Graph& g);
Graph canonical_representative(const Graph& g); // the graph the key encodes
std::string key_to_hex(const CanonKey& key);

Graph induced_subgraph(const Graph& g, VertexSet s);
Graph delete_vertex(const Graph& g, int u);

uint64_t component_of(const Graph& g, int u, uint64_t within); // connected component inside `within`
bool is_connected(const Graph& g);
std::vector<uint64_t> components(const Graph& g, uint64_t within);

Graph complement_graph(const Graph& g); // edge complement, colours kept

// Text format: `bgraph <n>` / `colours <bw...>|-` / `e <u> <v>` lines / `end`.
std::string format_graph(const Graph& g);
std::string to_dot(const Graph& g);
std::vector<Graph> parse_graphs(std::istream& in);
Graph parse_graph(const std::string& text);

// Exact labeled key (adjacency + colours) packed for hash sets; n <= 22.
struct LabeledKey {
    std::array<uint64_t, 4> w{};
    bool operator==(const LabeledKey&) const = default;
};
LabeledKey labeled_key(const Graph& g);

struct LabeledKeyHash {
    size_t operator()(const LabeledKey& k) const {
        uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (uint64_t x : k.w) {
            x ^= h;
            x *= 0xff51afd7ed558ccdULL;
            x ^= x >> 33;
            h = x;
        }
        return static_cast<size_t>(h);
    }
};

} // namespace purelab
