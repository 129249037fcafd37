// Canonical labeling by iterated colour refinement with
// individualization-and-refinement backtracking. The key is the smallest
// byte encoding of (n, colours, adjacency) over all discrete refinements
// reachable in the search tree, so equal keys exactly characterise
// colour-preserving isomorphism.

#include <algorithm>

#include "purelab/graph.hpp"

namespace purelab {

namespace {

struct Partition {
    // Vertices listed cell by cell; cells are contiguous ranges.
    std::array<uint8_t, kMaxVertices> order;
    std::array<uint8_t, kMaxVertices> cell_start; // per position: start of its cell
    std::array<uint8_t, kMaxVertices> cell_len;   // valid at cell start positions
    int n = 0;

    bool discrete() const {
        for (int i = 0; i < n; i += cell_len[i])
            if (cell_len[i] > 1) return false;
        return true;
    }
};

// Split every cell by neighbour counts toward every cell until stable.
// Subcells are ordered by ascending count, which keeps the process
// equivariant under relabeling.
void refine(const Graph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < p.n; s += std::max<int>(1, p.cell_len[s])) {
            uint64_t splitter = 0;
            for (int j = s; j < s + p.cell_len[s]; j++) splitter |= 1ULL << p.order[j];
            for (int c = 0; c < p.n; c += std::max<int>(1, p.cell_len[c])) {
                int len = p.cell_len[c];
                if (len <= 1) continue;
                int counts[kMaxVertices];
                bool differ = false;
                for (int j = 0; j < len; j++) {
                    counts[j] = std::popcount(g.adj[p.order[c + j]] & splitter);
                    if (counts[j] != counts[0]) differ = true;
                }
                if (!differ) continue;
                // stable counting split, ascending count
                std::array<uint8_t, kMaxVertices> tmp;
                int pos = 0;
                int minc = *std::min_element(counts, counts + len);
                int maxc = *std::max_element(counts, counts + len);
                for (int k = minc; k <= maxc; k++) {
                    int start = pos;
                    for (int j = 0; j < len; j++)
                        if (counts[j] == k) tmp[pos++] = p.order[c + j];
                    if (pos > start) {
                        for (int q = start; q < pos; q++)
                            p.cell_start[c + q] = static_cast<uint8_t>(c + start);
                        p.cell_len[c + start] = static_cast<uint8_t>(pos - start);
                    }
                }
                for (int j = 0; j < len; j++) p.order[c + j] = tmp[j];
                changed = true;
                // keep scanning with the same (now coarser-than-current)
                // splitter; the final no-change pass certifies stability
            }
        }
    }
}

void encode(const Graph& g, const Partition& p, std::string& out) {
    out.clear();
    out.push_back(static_cast<char>(g.n));
    out.push_back(g.coloured() ? 1 : 0);
    int nbytes = (g.n + 7) / 8;
    if (g.coloured()) {
        std::array<uint8_t, 8> cb{};
        for (int i = 0; i < g.n; i++)
            if (g.is_black(p.order[i])) cb[i >> 3] |= 1u << (i & 7);
        for (int b = 0; b < nbytes; b++) out.push_back(static_cast<char>(cb[b]));
    }
    int bit = 0;
    uint8_t acc = 0;
    for (int i = 0; i < g.n; i++) {
        for (int j = i + 1; j < g.n; j++) {
            if (g.edge(p.order[i], p.order[j])) acc |= 1u << bit;
            if (++bit == 8) {
                out.push_back(static_cast<char>(acc));
                acc = 0;
                bit = 0;
            }
        }
    }
    if (bit) out.push_back(static_cast<char>(acc));
}

struct CanonSearch {
    const Graph& g;
    std::string best;
    bool have_best = false;
    std::string scratch;

    explicit CanonSearch(const Graph& g_) : g(g_) {}

    void run(Partition p) {
        refine(g, p);
        if (p.discrete()) {
            encode(g, p, scratch);
            if (!have_best || scratch < best) {
                best = scratch;
                have_best = true;
            }
            return;
        }
        // first non-singleton cell
        int c = 0;
        while (p.cell_len[c] == 1) c += 1;
        int len = p.cell_len[c];
        for (int j = 0; j < len; j++) {
            Partition q = p;
            // individualize p.order[c+j]: move it to the front of the cell
            uint8_t v = p.order[c + j];
            int w = c;
            for (int k = c; k < c + len; k++)
                if (p.order[k] != v) q.order[++w] = p.order[k];
            q.order[c] = v;
            q.cell_len[c] = 1;
            q.cell_start[c] = static_cast<uint8_t>(c);
            q.cell_len[c + 1] = static_cast<uint8_t>(len - 1);
            for (int k = c + 1; k < c + len; k++) q.cell_start[k] = static_cast<uint8_t>(c + 1);
            run(q);
        }
    }
};

Partition initial_partition(const Graph& g) {
    Partition p;
    p.n = g.n;
    int pos = 0;
    if (!g.coloured()) {
        for (int v = 0; v < g.n; v++) p.order[pos++] = static_cast<uint8_t>(v);
        if (g.n > 0) {
            p.cell_len[0] = static_cast<uint8_t>(g.n);
            for (int i = 0; i < g.n; i++) p.cell_start[i] = 0;
        }
    } else {
        int white_start = 0;
        for (int v = 0; v < g.n; v++)
            if (g.is_white(v)) p.order[pos++] = static_cast<uint8_t>(v);
        int nwhite = pos;
        for (int v = 0; v < g.n; v++)
            if (g.is_black(v)) p.order[pos++] = static_cast<uint8_t>(v);
        if (nwhite > 0) {
            p.cell_len[white_start] = static_cast<uint8_t>(nwhite);
            for (int i = 0; i < nwhite; i++) p.cell_start[i] = 0;
        }
        if (g.n - nwhite > 0) {
            p.cell_len[nwhite] = static_cast<uint8_t>(g.n - nwhite);
            for (int i = nwhite; i < g.n; i++) p.cell_start[i] = static_cast<uint8_t>(nwhite);
        }
    }
    return p;
}

} // namespace

CanonKey canonical_form(const Graph& g) {
    if (g.n == 0) {
        std::string key;
        key.push_back(0);
        key.push_back(g.coloured() ? 1 : 0);
        return key;
    }
    CanonSearch search(g);
    search.run(initial_partition(g));
    return search.best;
}

Graph canonical_representative(const Graph& g) {
    CanonKey key = canonical_form(g);
    int n = static_cast<unsigned char>(key[0]);
    bool coloured = key[1] != 0;
    Graph h(n);
    size_t at = 2;
    int nbytes = (n + 7) / 8;
    if (coloured) {
        h.blacks = 0;
        for (int i = 0; i < n; i++)
            if ((static_cast<unsigned char>(key[at + (i >> 3)]) >> (i & 7)) & 1)
                h.set_colour(i, Colour::Black);
        at += nbytes;
    }
    int bit = 0;
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            if ((static_cast<unsigned char>(key[at]) >> bit) & 1) h.toggle_edge(i, j);
            if (++bit == 8) {
                bit = 0;
                at++;
            }
        }
    }
    return h;
}

} // namespace purelab
