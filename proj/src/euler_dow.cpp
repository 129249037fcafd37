// Double occurrence words, alternance graphs, twists and switches, the
// anticlique cycle splitter, and DOW realization.

#include <algorithm>
#include <functional>
#include <map>

#include "purelab/euler.hpp"
#include "purelab/parity.hpp"

namespace purelab {

Dow make_dow(const std::vector<int>& letters) {
    Dow w;
    w.letters = letters;
    std::map<int, int> count;
    int maxl = -1;
    for (int x : letters) {
        if (x < 0) fail(ErrorKind::NotDoubleOccurrence, "negative letter");
        count[x]++;
        maxl = std::max(maxl, x);
    }
    w.n_letters = maxl + 1;
    if (letters.size() != 2 * static_cast<size_t>(w.n_letters))
        fail(ErrorKind::NotDoubleOccurrence, "length must be twice the letter count");
    for (int x = 0; x < w.n_letters; x++)
        if (count[x] != 2) fail(ErrorKind::NotDoubleOccurrence, "every letter must occur twice");
    return w;
}

bool dow_equivalent(const Dow& a, const Dow& b) {
    if (a.letters.size() != b.letters.size()) return false;
    size_t k = a.letters.size();
    if (k == 0) return true;
    for (int rev = 0; rev < 2; rev++) {
        std::vector<int> cand = b.letters;
        if (rev) std::reverse(cand.begin(), cand.end());
        for (size_t r = 0; r < k; r++) {
            bool same = true;
            for (size_t i = 0; i < k && same; i++) same = a.letters[i] == cand[(i + r) % k];
            if (same) return true;
        }
    }
    return false;
}

Graph alternance_graph(const Dow& w) {
    std::vector<std::array<int, 2>> pos(w.n_letters, {-1, -1});
    for (size_t i = 0; i < w.letters.size(); i++) {
        int x = w.letters[i];
        if (pos[x][0] < 0)
            pos[x][0] = static_cast<int>(i);
        else
            pos[x][1] = static_cast<int>(i);
    }
    Graph g(w.n_letters);
    for (int a = 0; a < w.n_letters; a++)
        for (int b = a + 1; b < w.n_letters; b++) {
            bool in1 = pos[b][0] > pos[a][0] && pos[b][0] < pos[a][1];
            bool in2 = pos[b][1] > pos[a][0] && pos[b][1] < pos[a][1];
            if (in1 != in2) g.add_edge(a, b);
        }
    return natural_colouring(g);
}

Dow twist(const Dow& w, int u) {
    if (u < 0 || u >= w.n_letters) fail(ErrorKind::OutOfRange, "letter out of range");
    Dow out = w;
    int p1 = -1, p2 = -1;
    for (size_t i = 0; i < w.letters.size(); i++) {
        if (w.letters[i] != u) continue;
        (p1 < 0 ? p1 : p2) = static_cast<int>(i);
    }
    std::reverse(out.letters.begin() + p1 + 1, out.letters.begin() + p2);
    return out;
}

Dow dow_switch(const Dow& w, int u, int v) {
    Graph a = alternance_graph(w);
    if (!a.edge(u, v)) fail(ErrorKind::NotAlternating, "switch needs alternating letters");
    // w = u A v B u C v D -> u A v D u C v B, after rotating to start at u
    size_t k = w.letters.size();
    size_t ru = 0;
    while (w.letters[ru] != u) ru++;
    std::vector<int> rot(k);
    for (size_t i = 0; i < k; i++) rot[i] = w.letters[(ru + i) % k];
    size_t pv1 = 0, pu2 = 0, pv2 = 0;
    for (size_t i = 1; i < k; i++) {
        if (rot[i] == v && pv1 == 0) pv1 = i;
        if (rot[i] == u) pu2 = i;
        if (rot[i] == v && pv1 != 0 && i != pv1) pv2 = i;
    }
    std::vector<int> out;
    out.insert(out.end(), rot.begin(), rot.begin() + pv1 + 1);          // u A v
    out.insert(out.end(), rot.begin() + pv2 + 1, rot.end());            // D
    out.insert(out.end(), rot.begin() + pu2, rot.begin() + pv2 + 1);    // u C v
    out.insert(out.end(), rot.begin() + pv1 + 1, rot.begin() + pu2);    // B
    Dow res = w;
    res.letters = out;
    return res;
}

namespace {

struct CyclicSeq {
    std::vector<int> letters;
    std::vector<int> edges; // edges[i] joins letters[i] and letters[i+1 mod L]; may be empty
    bool with_edges() const { return !edges.empty(); }
};

std::vector<TourSegment> split_segments(CyclicSeq seq, std::vector<int> anticlique) {
    std::vector<TourSegment> out;
    while (!anticlique.empty()) {
        size_t k = seq.letters.size();
        bool extracted = false;
        for (size_t ai = 0; ai < anticlique.size() && !extracted; ai++) {
            int a = anticlique[ai];
            // both occurrences of a in the current sequence
            std::vector<size_t> occ;
            for (size_t i = 0; i < k; i++)
                if (seq.letters[i] == a) occ.push_back(i);
            if (occ.size() != 2) fail(ErrorKind::Internal, "anticlique letter not doubled");
            for (int arc = 0; arc < 2 && !extracted; arc++) {
                size_t p = arc == 0 ? occ[0] : occ[1];
                size_t q = arc == 0 ? occ[1] : occ[0];
                // interior p+1..q-1 cyclically; must avoid remaining anticlique letters
                bool clean = true;
                for (size_t i = (p + 1) % k; i != q; i = (i + 1) % k) {
                    if (std::find(anticlique.begin(), anticlique.end(), seq.letters[i]) !=
                        anticlique.end()) {
                        clean = false;
                        break;
                    }
                }
                if (!clean) continue;
                TourSegment cycle;
                CyclicSeq rest;
                for (size_t i = p; i != q; i = (i + 1) % k) {
                    cycle.letters.push_back(seq.letters[i]);
                    if (seq.with_edges()) cycle.edges.push_back(seq.edges[i]);
                }
                for (size_t i = q; i != p; i = (i + 1) % k) {
                    rest.letters.push_back(seq.letters[i]);
                    if (seq.with_edges()) rest.edges.push_back(seq.edges[i]);
                }
                out.push_back(std::move(cycle));
                seq = std::move(rest);
                anticlique.erase(anticlique.begin() + ai);
                extracted = true;
            }
        }
        if (!extracted) fail(ErrorKind::Internal, "no splittable anticlique letter");
    }
    TourSegment last;
    last.letters = seq.letters;
    last.edges = seq.edges;
    out.push_back(std::move(last));
    // every segment must be a cycle: letters pairwise distinct
    for (const TourSegment& seg : out) {
        std::vector<int> ls = seg.letters;
        std::sort(ls.begin(), ls.end());
        if (std::adjacent_find(ls.begin(), ls.end()) != ls.end())
            fail(ErrorKind::Internal, "segment revisits a vertex");
    }
    return out;
}

void check_anticlique(const Graph& g, VertexSet a) {
    for (int u : a.to_vector()) {
        g.check_vertex(u);
        if (g.adj[u] & a.bits) fail(ErrorKind::NotAnticlique, "set not independent");
    }
    uint64_t dominated = a.bits;
    for (int u : a.to_vector()) dominated |= g.adj[u];
    if (dominated != g.vertex_mask()) fail(ErrorKind::NotAnticlique, "set not dominating");
}

} // namespace

std::vector<TourSegment> cycles_from_anticlique(const Dow& w, VertexSet a) {
    check_anticlique(alternance_graph(w), a);
    CyclicSeq seq;
    seq.letters = w.letters;
    return split_segments(std::move(seq), a.to_vector());
}

std::vector<TourSegment> cycles_from_anticlique_tour(const AltTour& t, VertexSet a) {
    check_anticlique(alternance_graph(dow_of(t)), a);
    CyclicSeq seq;
    seq.letters = t.letters;
    seq.edges = t.edges;
    return split_segments(std::move(seq), a.to_vector());
}

Dow dow_of(const AltTour& t) { return make_dow(t.letters); }

void twist_tour(AltTour& t, int u) {
    int p1 = -1, p2 = -1;
    for (size_t i = 0; i < t.letters.size(); i++) {
        if (t.letters[i] != u) continue;
        (p1 < 0 ? p1 : p2) = static_cast<int>(i);
    }
    if (p1 < 0 || p2 < 0) fail(ErrorKind::OutOfRange, "letter not in tour");
    std::reverse(t.letters.begin() + p1 + 1, t.letters.begin() + p2);
    std::reverse(t.edges.begin() + p1, t.edges.begin() + p2);
}

AltTour alternating_euler_tour(const TransitionGraph& tg) {
    const Multigraph& m = tg.graph;
    // validate the two-2-factor shape
    for (int v = 0; v < m.n; v++) {
        int solid = 0, broken = 0;
        for (int d = 0; d < m.dart_count(); d++)
            if (m.dart_anchor(d) == v) (tg.broken[m.dart_edge(d)] ? broken : solid)++;
        if (solid != 2 || broken != 2)
            fail(ErrorKind::NotTwoFactored, "need two 2-factors at every vertex");
    }
    // initial pairing: solid dart with broken dart, smallest ids first
    TransitionSystem pairing;
    pairing.mate.assign(m.dart_count(), -1);
    for (int v = 0; v < m.n; v++) {
        std::vector<int> solid, broken;
        for (int d = 0; d < m.dart_count(); d++)
            if (m.dart_anchor(d) == v) (tg.broken[m.dart_edge(d)] ? broken : solid).push_back(d);
        pairing.mate[solid[0]] = broken[0];
        pairing.mate[broken[0]] = solid[0];
        pairing.mate[solid[1]] = broken[1];
        pairing.mate[broken[1]] = solid[1];
    }
    // merge tours by flipping the pairing at the smallest shared vertex
    while (true) {
        std::vector<DartTour> tours = tours_of(m, pairing);
        if (tours.size() <= 1) {
            if (tours.empty()) return {};
            const DartTour& t = tours[0];
            AltTour out;
            for (int d : t) {
                out.letters.push_back(m.dart_anchor(d));
                out.edges.push_back(m.dart_edge(d));
            }
            return out;
        }
        std::vector<int> tour_of_vertex(m.n, -1);
        int flip = -1;
        for (size_t ti = 0; ti < tours.size() && flip < 0; ti++) {
            for (int d : tours[ti]) {
                int v = m.dart_anchor(d);
                if (tour_of_vertex[v] >= 0 && tour_of_vertex[v] != static_cast<int>(ti)) {
                    flip = v;
                    break;
                }
                tour_of_vertex[v] = static_cast<int>(ti);
            }
        }
        if (flip < 0) fail(ErrorKind::NotConnected, "transition graph not connected");
        std::vector<int> solid, broken;
        for (int d = 0; d < m.dart_count(); d++)
            if (m.dart_anchor(d) == flip) (tg.broken[m.dart_edge(d)] ? broken : solid).push_back(d);
        // the other solid-broken matching at `flip`
        int s0 = solid[0];
        int b_now = pairing.mate[s0];
        int b_other = broken[0] == b_now ? broken[1] : broken[0];
        int s1 = solid[1];
        pairing.mate[s0] = b_other;
        pairing.mate[b_other] = s0;
        pairing.mate[s1] = b_now;
        pairing.mate[b_now] = s1;
    }
}

std::optional<Dow> realize_dow(const Graph& g) {
    if (g.n > 8) fail(ErrorKind::OutOfRange, "realization capped at 8 letters");
    if (g.n == 0) return make_dow({});
    int slots = 2 * g.n;
    std::vector<int> word(slots, -1);
    std::vector<std::array<int, 2>> pos(g.n, {-1, -1});

    std::function<bool(int)> place = [&](int letter) -> bool {
        if (letter == g.n) return true;
        for (int i = letter == 0 ? 0 : 0; i < slots; i++) {
            if (word[i] >= 0) continue;
            if (letter == 0 && i > 0) break; // fix letter 0 at slot 0 (rotation)
            for (int j = i + 1; j < slots; j++) {
                if (word[j] >= 0) continue;
                // check alternance against all placed letters
                bool ok = true;
                for (int x = 0; x < letter && ok; x++) {
                    bool in1 = pos[x][0] > i && pos[x][0] < j;
                    bool in2 = pos[x][1] > i && pos[x][1] < j;
                    ok = (in1 != in2) == g.edge(x, letter);
                }
                if (!ok) continue;
                word[i] = word[j] = letter;
                pos[letter] = {i, j};
                if (place(letter + 1)) return true;
                word[i] = word[j] = -1;
                pos[letter] = {-1, -1};
            }
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    return make_dow(word);
}

std::pair<Multigraph, TransitionSystem> dow_to_ts(const Dow& w) {
    // Letters become vertices and adjacencies edges. The transition system
    // is the one whose transition graph carries the doubled word as an
    // alternating tour: at each letter the reading tour's in/out darts pair
    // crosswise when the letter is white and parallel when black (this is
    // what contracting the digons of the doubled circle diagram gives).
    Multigraph m(w.n_letters);
    size_t k = w.letters.size();
    std::vector<int> edge_at(k);
    for (size_t i = 0; i < k; i++)
        edge_at[i] = m.add_edge(w.letters[i], w.letters[(i + 1) % k]);
    Graph inter = alternance_graph(w);
    TransitionSystem s;
    s.mate.assign(m.dart_count(), -1);
    auto pair_darts = [&](int a, int b) {
        s.mate[a] = b;
        s.mate[b] = a;
    };
    for (int v = 0; v < w.n_letters; v++) {
        std::vector<size_t> occ;
        for (size_t i = 0; i < k; i++)
            if (w.letters[i] == v) occ.push_back(i);
        auto in_dart = [&](size_t o) {
            int e = edge_at[(o + k - 1) % k];
            if (m.is_loop(e)) return 2 * e + 1;
            return m.edges[e].v == v ? 2 * e + 1 : 2 * e;
        };
        auto out_dart = [&](size_t o) {
            int e = edge_at[o];
            if (m.is_loop(e)) return 2 * e;
            return m.edges[e].u == v ? 2 * e : 2 * e + 1;
        };
        int i1 = in_dart(occ[0]), o1 = out_dart(occ[0]);
        int i2 = in_dart(occ[1]), o2 = out_dart(occ[1]);
        if (inter.is_white(v)) {
            pair_darts(i1, o2);
            pair_darts(o1, i2);
        } else {
            pair_darts(i1, i2);
            pair_darts(o1, o2);
        }
    }
    return {m, s};
}

} // namespace purelab
