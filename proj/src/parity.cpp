#include "purelab/parity.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <unordered_map>

namespace purelab {

Graph natural_colouring(const Graph& g) {
    Graph h = g;
    h.blacks = 0;
    for (int u = 0; u < g.n; u++)
        if (g.degree(u) % 2 != 0) h.set_colour(u, Colour::Black);
    return h;
}

Graph parity_letter(const Graph& g, int u) {
    if (!g.coloured()) fail(ErrorKind::IllegalMove, "parity moves need a bicoloured graph");
    bool white = g.is_white(u);
    uint64_t nb = g.adj[u];
    Graph h = local_complement(g, u);
    if (white) h.flip_colours(nb);
    return h;
}

Graph parity_apply(const Graph& g, const Word& s) {
    Graph h = g;
    for (int u : s) h = parity_letter(h, u);
    return h;
}

std::vector<ParityMove> legal_parity_moves(const Graph& g) {
    std::vector<ParityMove> moves;
    for (int u = 0; u < g.n; u++)
        if (g.is_white(u)) moves.push_back({ParityMove::WhiteVertex, u, -1});
    for (int u = 0; u < g.n; u++) {
        if (!g.is_black(u)) continue;
        uint64_t nb = g.adj[u] & *g.blacks;
        nb &= ~((u >= 63) ? ~0ULL : ((2ULL << u) - 1)); // v > u once per edge
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            moves.push_back({ParityMove::BlackEdge, u, v});
        }
    }
    return moves;
}

Graph parity_complement(const Graph& g, const ParityMove& m) {
    if (!g.coloured()) fail(ErrorKind::IllegalMove, "parity moves need a bicoloured graph");
    g.check_vertex(m.u);
    if (m.kind == ParityMove::WhiteVertex) {
        if (!g.is_white(m.u)) fail(ErrorKind::IllegalMove, "vertex move needs a white vertex");
        return parity_letter(g, m.u);
    }
    g.check_vertex(m.v);
    if (!g.is_black(m.u) || !g.is_black(m.v))
        fail(ErrorKind::IllegalMove, "edge move needs two black vertices");
    if (!g.edge(m.u, m.v)) fail(ErrorKind::IllegalMove, "edge move needs an edge");
    return parity_apply(g, {m.u, m.v, m.u});
}

Graph couple_complement(const Graph& g, int u, int v) {
    if (!g.coloured()) fail(ErrorKind::IllegalMove, "couple complement needs colours");
    g.check_vertex(u);
    g.check_vertex(v);
    if (!g.is_black(u)) fail(ErrorKind::IllegalMove, "couple complement needs u black");
    if (!g.edge(u, v)) fail(ErrorKind::NonAdjacent, "couple complement needs [u,v] in E");
    if (g.is_white(v)) return parity_apply(g, {v, u});
    return parity_apply(g, {v, u, v});
}

Word ParityClass::word_to(int index) const {
    std::vector<int> chain;
    for (int at = index; at >= 0; at = entries[at].parent) chain.push_back(at);
    std::reverse(chain.begin(), chain.end());
    Word w;
    for (int at : chain) {
        if (entries[at].parent < 0) continue;
        const ParityMove& m = entries[at].via;
        w.push_back(m.u);
        if (m.kind == ParityMove::BlackEdge) {
            w.push_back(m.v);
            w.push_back(m.u);
        }
    }
    return w;
}

ParityClass enumerate_parity_class(const Graph& g, Budget budget, int jobs) {
    if (!g.coloured()) fail(ErrorKind::IllegalMove, "parity class needs a bicoloured seed");
    ParityClass cls;
    std::map<CanonKey, int> index;
    cls.entries.push_back({canonical_form(g), g, -1, {}});
    index.emplace(cls.entries[0].key, 0);
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        struct Found {
            CanonKey key;
            Graph rep;
            int parent;
            ParityMove via;
        };
        std::vector<Found> found;
        auto expand = [&](int at, std::vector<Found>& out) {
            const Graph cur = cls.entries[at].rep;
            for (const ParityMove& m : legal_parity_moves(cur)) {
                Graph h = parity_complement(cur, m);
                out.push_back({canonical_form(h), std::move(h), at, m});
            }
        };
        if (jobs <= 1 || frontier.size() < 4) {
            for (int at : frontier) expand(at, found);
        } else {
            size_t chunk = (frontier.size() + jobs - 1) / jobs;
            std::vector<std::future<std::vector<Found>>> futs;
            for (size_t start = 0; start < frontier.size(); start += chunk) {
                size_t end = std::min(frontier.size(), start + chunk);
                futs.push_back(std::async(std::launch::async, [&, start, end]() {
                    std::vector<Found> local;
                    for (size_t i = start; i < end; i++) expand(frontier[i], local);
                    return local;
                }));
            }
            for (auto& f : futs) {
                auto local = f.get();
                for (auto& item : local) found.push_back(std::move(item));
            }
        }
        std::vector<int> next;
        for (auto& item : found) {
            if (index.count(item.key)) continue;
            if (cls.entries.size() >= budget.max_states)
                fail(ErrorKind::BudgetExceeded, "parity class exceeds state budget");
            int id = static_cast<int>(cls.entries.size());
            index.emplace(item.key, id);
            cls.entries.push_back({item.key, item.rep, item.parent, item.via});
            next.push_back(id);
        }
        frontier = std::move(next);
    }
    cls.sorted_by_key.resize(cls.entries.size());
    for (size_t i = 0; i < cls.entries.size(); i++) cls.sorted_by_key[i] = static_cast<int>(i);
    std::sort(cls.sorted_by_key.begin(), cls.sorted_by_key.end(),
              [&](int a, int b) { return cls.entries[a].key < cls.entries[b].key; });
    return cls;
}

namespace {

// Branch and bound: grow an independent all-black set until it dominates
// everything; branch on an undominated vertex with the fewest candidate
// dominators.
bool anticlique_search(const Graph& g, uint64_t blacks, uint64_t chosen, uint64_t banned,
                       uint64_t& result) {
    uint64_t dominated = chosen;
    uint64_t b = chosen;
    while (b) {
        int v = std::countr_zero(b);
        b &= b - 1;
        dominated |= g.adj[v];
    }
    uint64_t undom = g.vertex_mask() & ~dominated;
    if (!undom) {
        result = chosen;
        return true;
    }
    // candidates for covering a vertex w: black, unbanned, in closed N(w)
    uint64_t avail = blacks & ~banned;
    int best_w = -1;
    uint64_t best_cands = 0;
    int best_count = 1 << 30;
    uint64_t scan = undom;
    while (scan) {
        int w = std::countr_zero(scan);
        scan &= scan - 1;
        uint64_t cands = (g.adj[w] | (1ULL << w)) & avail;
        int c = std::popcount(cands);
        if (c == 0) return false; // w can never be dominated
        if (c < best_count) {
            best_count = c;
            best_w = w;
            best_cands = cands;
        }
    }
    (void)best_w;
    // order candidates by descending degree, then ascending id
    std::vector<int> order;
    uint64_t cb = best_cands;
    while (cb) {
        int v = std::countr_zero(cb);
        cb &= cb - 1;
        order.push_back(v);
    }
    std::sort(order.begin(), order.end(), [&](int a, int bb) {
        int da = g.degree(a), db = g.degree(bb);
        if (da != db) return da > db;
        return a < bb;
    });
    uint64_t new_banned = banned;
    for (int v : order) {
        if (anticlique_search(g, blacks, chosen | (1ULL << v),
                              (new_banned | g.adj[v]) & ~(1ULL << v), result))
            return true;
        new_banned |= 1ULL << v; // exclude v from deeper branches
    }
    return false;
}

} // namespace

std::optional<VertexSet> find_black_anticlique(const Graph& g) {
    if (!g.coloured()) fail(ErrorKind::IllegalMove, "anticlique search needs colours");
    uint64_t result = 0;
    if (g.n == 0) return VertexSet{}; // empty set dominates the empty graph
    if (anticlique_search(g, *g.blacks, 0, 0, result)) return VertexSet(result);
    return std::nullopt;
}

PurityReport is_pure(const Graph& g, Budget budget, int jobs) {
    // enumerate breadth first, checking each new representative for an
    // anticlique so impure classes exit early
    if (!g.coloured()) fail(ErrorKind::IllegalMove, "purity needs a bicoloured graph");
    PurityReport report{true, 0, -1, {}, {}};
    ParityClass cls;
    std::map<CanonKey, int> index;
    cls.entries.push_back({canonical_form(g), g, -1, {}});
    index.emplace(cls.entries[0].key, 0);
    std::vector<int> frontier{0};
    auto check = [&](int id) {
        if (auto a = find_black_anticlique(cls.entries[id].rep)) {
            report.pure = false;
            report.witness_index = id;
            report.anticlique = *a;
            report.witness_word = cls.word_to(id);
            return true;
        }
        return false;
    };
    if (check(0)) {
        report.class_size = 1;
        return report;
    }
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int at : frontier) {
            const Graph cur = cls.entries[at].rep;
            for (const ParityMove& m : legal_parity_moves(cur)) {
                Graph h = parity_complement(cur, m);
                CanonKey key = canonical_form(h);
                if (index.count(key)) continue;
                if (cls.entries.size() >= budget.max_states)
                    fail(ErrorKind::BudgetExceeded, "parity class exceeds state budget");
                int id = static_cast<int>(cls.entries.size());
                index.emplace(key, id);
                cls.entries.push_back({key, h, at, m});
                next.push_back(id);
                if (check(id)) {
                    report.class_size = cls.entries.size();
                    return report;
                }
            }
        }
        frontier = std::move(next);
    }
    (void)jobs;
    report.class_size = cls.entries.size();
    return report;
}

std::optional<Word> find_set_word(const Graph& g, VertexSet S) {
    if (!g.coloured()) fail(ErrorKind::IllegalMove, "complementation sets need colours");
    if (S.bits & ~g.vertex_mask()) fail(ErrorKind::OutOfRange, "set vertex out of range");
    // Partial disjoint-atom words with equal support reach equal graphs, so
    // the search state is just the set of used vertices.
    struct Step {
        uint64_t parent;
        int u, v; // atom; v = -1 for a white single
    };
    std::unordered_map<uint64_t, std::pair<Graph, Step>> seen;
    seen.emplace(0, std::pair<Graph, Step>{g, {0, -1, -1}});
    std::vector<uint64_t> stack{0};
    while (!stack.empty()) {
        uint64_t used = stack.back();
        stack.pop_back();
        const Graph cur = seen.at(used).first;
        uint64_t avail = S.bits & ~used;
        if (!avail) continue;
        // candidate atoms in deterministic order
        std::vector<std::pair<int, int>> atoms;
        uint64_t a = avail;
        while (a) {
            int u = std::countr_zero(a);
            a &= a - 1;
            if (cur.is_white(u)) atoms.push_back({u, -1});
        }
        a = avail;
        while (a) {
            int u = std::countr_zero(a);
            a &= a - 1;
            if (!cur.is_black(u)) continue;
            uint64_t nb = cur.adj[u] & *cur.blacks & avail;
            nb &= ~((u >= 63) ? ~0ULL : ((2ULL << u) - 1));
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                atoms.push_back({u, v});
            }
        }
        for (auto [u, v] : atoms) {
            uint64_t nused = used | (1ULL << u) | (v >= 0 ? (1ULL << v) : 0);
            if (seen.count(nused)) continue;
            Graph h = v < 0 ? parity_letter(cur, u) : parity_apply(cur, {u, v, u});
            seen.emplace(nused, std::pair<Graph, Step>{std::move(h), Step{used, u, v}});
            if (nused == S.bits) {
                Word w;
                uint64_t at = nused;
                std::vector<Step> steps;
                while (at != 0) {
                    Step st = seen.at(at).second;
                    steps.push_back(st);
                    at = st.parent;
                }
                std::reverse(steps.begin(), steps.end());
                for (const Step& st : steps) {
                    w.push_back(st.u);
                    if (st.v >= 0) {
                        w.push_back(st.v);
                        w.push_back(st.u);
                    }
                }
                return w;
            }
            stack.push_back(nused);
        }
    }
    return std::nullopt;
}

Graph complement_with_set(const Graph& g, VertexSet S) {
    auto w = find_set_word(g, S);
    if (!w) fail(ErrorKind::NotAComplementationSet, "no reduced parity word has this support");
    return parity_apply(g, *w);
}

bool is_invertible(const Graph& g) {
    Graph seed = g.coloured() ? g : natural_colouring(g);
    return find_set_word(seed, VertexSet::full(seed.n)).has_value();
}

Graph invert(const Graph& g) {
    Graph seed = g.coloured() ? g : natural_colouring(g);
    auto w = find_set_word(seed, VertexSet::full(seed.n));
    if (!w) fail(ErrorKind::NotInvertible, "vertex set is not a complementation set");
    return parity_apply(seed, *w);
}

} // namespace purelab
