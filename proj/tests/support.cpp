#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace purelab::test {

Graph random_graph(std::mt19937& rng, int n, double p, bool coloured) {
    Graph g(n);
    std::bernoulli_distribution edge(p);
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (edge(rng)) g.add_edge(u, v);
    if (coloured) {
        g.blacks = 0;
        std::bernoulli_distribution black(0.5);
        for (int u = 0; u < n; u++)
            if (black(rng)) g.set_colour(u, Colour::Black);
    }
    return g;
}

std::vector<Graph> all_graphs(int n) {
    int bits = n * (n - 1) / 2;
    std::vector<Graph> out;
    for (uint64_t code = 0; code < (1ULL << bits); code++) {
        Graph g(n);
        int b = 0;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if ((code >> b++) & 1) g.add_edge(u, v);
        out.push_back(g);
    }
    return out;
}

std::vector<Graph> all_connected_graphs(int n) {
    std::vector<Graph> out;
    for (Graph& g : all_graphs(n))
        if (is_connected(g)) out.push_back(g);
    return out;
}

std::vector<Graph> all_colourings(const Graph& g) {
    std::vector<Graph> out;
    for (uint64_t mask = 0; mask < (1ULL << g.n); mask++) {
        Graph h = g;
        h.blacks = mask;
        out.push_back(h);
    }
    return out;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.n);
    if (g.coloured()) h.blacks = 0;
    for (int u = 0; u < g.n; u++) {
        if (g.coloured()) h.set_colour(perm[u], g.colour(u));
        for (int v = u + 1; v < g.n; v++)
            if (g.edge(u, v)) h.add_edge(perm[u], perm[v]);
    }
    return h;
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.coloured() != b.coloured()) return false;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (permuted(a, perm) == b) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return a.n == 0;
}

std::vector<std::vector<int>> automorphisms(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (permuted(g, perm) == g) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace purelab::test
