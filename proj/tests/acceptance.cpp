// Acceptance suite: runs every acceptance criterion and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "purelab/euler.hpp"
#include "purelab/families.hpp"
#include "purelab/orbit.hpp"
#include "purelab/parity.hpp"
#include "purelab/split.hpp"
#include "purelab/word.hpp"
#include "support.hpp"

using namespace purelab;
using namespace purelab::test;

namespace {

int failures = 0;

void report(int criterion, const char* name, bool ok, const std::string& detail = "") {
    std::printf("criterion %2d (%s): %s%s\n", criterion, name, ok ? "PASS" : "FAIL",
                detail.empty() ? "" : ("  [" + detail + "]").c_str());
    std::fflush(stdout);
    if (!ok) failures++;
}

size_t class_count(const Graph& g) { return enumerate_parity_class(g).entries.size(); }

// ---- criterion helpers ----

void criterion_1() {
    std::map<int, size_t> expect{{9, 23}, {13, 138}, {17, 1034}, {21, 8957}};
    std::string detail;
    bool ok = true;
    for (auto [n, want] : expect) {
        size_t got = class_count(natural_colouring(gen_cycle(n)));
        detail += "C" + std::to_string(n) + "=" + std::to_string(got) + " ";
        if (got != want) ok = false;
    }
    report(1, "cycle parity class counts", ok, detail);
}

void criterion_2() {
    std::map<int, size_t> expect{{2, 60}, {3, 197}, {4, 571}, {5, 1459}};
    std::string detail;
    bool ok = true;
    for (auto [m, want] : expect) {
        Graph seed = natural_colouring(gen_pentagon_bouquet(m));
        size_t got = class_count(seed);
        bool pure = is_pure(seed).pure;
        detail += "m" + std::to_string(m) + "=" + std::to_string(got) + (pure ? "/pure " : "/IMPURE ");
        if (got != want || !pure) ok = false;
    }
    report(2, "pentagon bouquet counts and purity", ok, detail);
}

void criterion_3() {
    PurityReport z13 = is_pure(natural_colouring(gen_circulant({13, {1, 3, 4}})));
    PurityReport z17 = is_pure(natural_colouring(gen_circulant({17, {1, 5}})));
    bool ok = z13.pure && z13.class_size == 39 && z17.pure && z17.class_size == 1069;
    report(3, "circulant pure classes", ok,
           "Z13=" + std::to_string(z13.class_size) + (z13.pure ? "/pure" : "/IMPURE") +
               " Z17=" + std::to_string(z17.class_size) + (z17.pure ? "/pure" : "/IMPURE"));
}

void criterion_4() {
    Graph k1w(1);
    k1w.blacks = 0;
    Graph k1b(1);
    k1b.blacks = 1;
    bool ok = is_pure(k1w).pure && is_pure(natural_colouring(gen_cycle(5))).pure &&
              !is_pure(k1b).pure;
    report(4, "base pure classes", ok);
}

void criterion_5() {
    auto [m, s] = gen_k5_two_pentagons_ts();
    Graph g = ts_to_bicoloured(m, s);
    CanonKey key = canonical_form(g);
    bool in_pentagon_class = false;
    for (const auto& e : enumerate_parity_class(natural_colouring(gen_cycle(5))).entries)
        if (e.key == key) in_pentagon_class = true;
    bool parity_none = !orthogonal_cycle_decomposition(m, s, OcdRoute::Parity).has_value();
    bool backtracking_none = !orthogonal_cycle_decomposition(m, s, OcdRoute::Backtracking).has_value();
    report(5, "K5 correspondence and OCD absence", in_pentagon_class && parity_none && backtracking_none);
}

void criterion_6() {
    bool ok = true;
    std::string detail;
    for (int n = 4; n <= 20; n++) {
        bool invertible = is_invertible(gen_cycle(n));
        if (n % 3 == 0) {
            if (invertible) {
                ok = false;
                detail += "C" + std::to_string(n) + " should not invert ";
            }
            continue;
        }
        if (!invertible) {
            ok = false;
            detail += "C" + std::to_string(n) + " should invert ";
            continue;
        }
        std::set<int> conn;
        if (n % 3 == 1) {
            conn.insert(1);
            for (int i = 1; 3 * i <= n - 1; i++) {
                conn.insert(3 * i - 2);
                conn.insert(3 * i);
            }
        } else {
            for (int i = 1; 3 * i <= n - 2; i++) {
                conn.insert(3 * i - 1);
                conn.insert(3 * i);
            }
        }
        Graph expect = gen_circulant({n, conn});
        expect.blacks = 0;
        if (!(invert(gen_cycle(n)) == expect)) {
            ok = false;
            detail += "C" + std::to_string(n) + " wrong inverse ";
        }
    }
    for (int n : {4, 5, 7}) {
        Graph g = natural_colouring(gen_cycle(n));
        if (automorphisms(g) != automorphisms(invert(g))) {
            ok = false;
            detail += "Aut(C" + std::to_string(n) + ") changed ";
        }
    }
    report(6, "cycle inversion and automorphisms", ok, detail);
}

void criterion_7() {
    bool ok = strongly_regular_mod(gen_paley(5), 2, 1, 0, 0, 1) &&
              strongly_regular_mod(gen_paley(13), 2, 1, 0, 0, 1) &&
              strongly_regular_mod(gen_paley(29), 2, 1, 0, 0, 1) &&
              !strongly_regular_mod(gen_paley(17), 2, 1, 0, 0, 1);
    ok = ok && complement_reachable(gen_paley(5)) && complement_reachable_bfs(gen_paley(5));
    report(7, "complement reachability", ok);
}

void criterion_8() {
    int d = complementation_diameter(gen_fdf_chain(1));
    bool ok = d == 10;
    std::string detail = "fdf_chain(1)=" + std::to_string(d);
    for (int n = 1; n <= 5 && ok; n++) {
        std::set<CanonKey> seen;
        for (const Graph& g : all_connected_graphs(n)) {
            if (!seen.insert(canonical_form(g)).second) continue;
            int bound = std::max(n + 1, (10 * n + 8) / 9);
            if (complementation_diameter(g) > bound) {
                ok = false;
                detail += " bound violated at n=" + std::to_string(n);
                break;
            }
        }
    }
    report(8, "complementation diameters", ok, detail);
}

void criterion_9() {
    std::mt19937 rng(987654321);
    bool ok = true;
    for (int t = 0; t < 100 && ok; t++) {
        int n = 3 + static_cast<int>(rng() % 8);
        Multigraph m(0);
        while (true) {
            std::vector<int> stubs;
            for (int v = 0; v < n; v++)
                for (int k = 0; k < 4; k++) stubs.push_back(v);
            std::shuffle(stubs.begin(), stubs.end(), rng);
            Multigraph cand(n);
            bool loop = false;
            for (size_t i = 0; i < stubs.size(); i += 2) {
                if (stubs[i] == stubs[i + 1]) loop = true;
                cand.add_edge(stubs[i], stubs[i + 1]);
            }
            if (!loop && cand.connected()) {
                m = cand;
                break;
            }
        }
        TransitionSystem s;
        s.mate.assign(m.dart_count(), -1);
        for (int v = 0; v < m.n; v++) {
            std::vector<int> darts = m.darts_at(v);
            std::shuffle(darts.begin(), darts.end(), rng);
            for (size_t i = 0; i < darts.size(); i += 2) {
                s.mate[darts[i]] = darts[i + 1];
                s.mate[darts[i + 1]] = darts[i];
            }
        }
        KotzigResult r = orthogonal_euler_tour(m, s);
        std::set<Trans> forbidden = transitions_of(m, s);
        for (const Trans& tr : transitions_of_tours(m, {r.tour}))
            if (forbidden.count(tr)) ok = false;
        for (size_t i = 1; i < r.faulty_history.size(); i++)
            if (r.faulty_history[i] >= r.faulty_history[i - 1]) ok = false;
    }
    report(9, "orthogonal Euler tours on 100 random instances", ok);
}

void criterion_10() {
    std::mt19937 rng(1357911);
    bool ok = true;
    for (int t = 0; t < 200 && ok; t++) {
        int n = 2 + static_cast<int>(rng() % 7);
        std::vector<int> letters;
        for (int i = 0; i < n; i++) {
            letters.push_back(i);
            letters.push_back(i);
        }
        std::shuffle(letters.begin(), letters.end(), rng);
        Dow w = make_dow(letters);
        Graph a = alternance_graph(w);
        VertexSet anti;
        uint64_t banned = 0;
        for (int v = 0; v < n; v++) {
            if ((banned >> v) & 1) continue;
            anti.add(v);
            banned |= a.adj[v] | (1ULL << v);
        }
        auto segs = cycles_from_anticlique(w, anti);
        if (segs.size() != static_cast<size_t>(anti.count()) + 1) ok = false;
        size_t total = 0;
        for (const auto& seg : segs) {
            total += seg.letters.size();
            std::set<int> distinct(seg.letters.begin(), seg.letters.end());
            if (distinct.size() != seg.letters.size()) ok = false;
        }
        if (total != w.letters.size()) ok = false;
        bool all_odd = true;
        for (int v : anti.to_vector())
            if (a.degree(v) % 2 == 0) all_odd = false;
        if (all_odd)
            for (const auto& seg : segs)
                if (seg.letters.size() % 2 != 0) ok = false;
    }
    report(10, "anticlique cycle decompositions on 200 random words", ok);
}

void criterion_11() {
    Graph pet = gen_petersen();
    CdcResult line = cdc_route(pet, CdcRoute::LineGraph);
    CdcResult factor = cdc_route(pet, CdcRoute::OneFactor);
    bool ok = line.cycles.has_value() && verify_cdc(pet, *line.cycles);
    ok = ok && !factor.cycles.has_value() && factor.pure_obstruction;

    Graph k4 = gen_complete(4);
    CdcResult k4r = cdc_search(k4);
    ok = ok && k4r.cycles && verify_cdc(k4, *k4r.cycles);

    Graph k33(6);
    for (int i = 0; i < 3; i++)
        for (int j = 3; j < 6; j++) k33.add_edge(i, j);
    CdcResult k33r = cdc_search(k33);
    ok = ok && k33r.cycles && verify_cdc(k33, *k33r.cycles);
    report(11, "cycle double cover pipeline", ok);
}

// connected loopless 4-regular multigraphs on <= max_n vertices, up to iso
std::vector<Multigraph> four_regular_multigraphs(int max_n) {
    std::vector<Multigraph> out;
    for (int n = 2; n <= max_n; n++) {
        int cells = n * (n - 1) / 2;
        std::vector<int> mult(cells, 0);
        std::set<std::vector<int>> seen;
        auto cell = [&](int i, int j) {
            if (i > j) std::swap(i, j);
            return i * n - i * (i + 1) / 2 + (j - i - 1);
        };
        std::function<void(int)> rec = [&](int at) {
            if (at == cells) {
                std::vector<int> deg(n, 0);
                for (int i = 0; i < n; i++)
                    for (int j = i + 1; j < n; j++) {
                        deg[i] += mult[cell(i, j)];
                        deg[j] += mult[cell(i, j)];
                    }
                for (int v = 0; v < n; v++)
                    if (deg[v] != 4) return;
                Multigraph m(n);
                for (int i = 0; i < n; i++)
                    for (int j = i + 1; j < n; j++)
                        for (int k = 0; k < mult[cell(i, j)]; k++) m.add_edge(i, j);
                if (!m.connected()) return;
                // canonical multiplicity vector over all vertex permutations
                std::vector<int> perm(n);
                std::iota(perm.begin(), perm.end(), 0);
                std::vector<int> best;
                do {
                    std::vector<int> img(cells);
                    for (int i = 0; i < n; i++)
                        for (int j = i + 1; j < n; j++)
                            img[cell(perm[i], perm[j])] = mult[cell(i, j)];
                    if (best.empty() || img < best) best = img;
                } while (std::next_permutation(perm.begin(), perm.end()));
                if (seen.insert(best).second) out.push_back(m);
                return;
            }
            for (int k = 0; k <= 4; k++) {
                mult[at] = k;
                rec(at + 1);
            }
            mult[at] = 0;
        };
        rec(0);
    }
    return out;
}

void all_transition_systems(const Multigraph& m,
                            const std::function<void(const TransitionSystem&)>& fn) {
    TransitionSystem s;
    s.mate.assign(m.dart_count(), -1);
    std::function<void(int)> rec = [&](int v) {
        if (v == m.n) {
            fn(s);
            return;
        }
        std::vector<int> d = m.darts_at(v);
        std::vector<std::array<int, 4>> matchings = {{d[0], d[1], d[2], d[3]},
                                                     {d[0], d[2], d[1], d[3]},
                                                     {d[0], d[3], d[1], d[2]}};
        for (auto& mm : matchings) {
            s.mate[mm[0]] = mm[1];
            s.mate[mm[1]] = mm[0];
            s.mate[mm[2]] = mm[3];
            s.mate[mm[3]] = mm[2];
            rec(v + 1);
            for (int x : mm) s.mate[x] = -1;
        }
    };
    rec(0);
}

void criterion_12() {
    bool ok = true;
    std::string detail;
    std::mt19937 rng(24680);

    // local and global rule suites on 500 random graphs
    for (int t = 0; t < 500 && ok; t++) {
        int n = 2 + rng() % 9;
        Graph g = random_graph(rng, n, 0.5);
        int u = rng() % n, v = rng() % n, w = rng() % n;
        if (!(apply_word(g, {u, u}) == g)) ok = false;
        if (u != v && !g.edge(u, v) && !(apply_word(g, {u, v, u, v}) == g)) ok = false;
        if (u != v && g.edge(u, v) && !(apply_word(g, {u, v, u, v, u, v}) == g)) ok = false;
        if (u != v && v != w && u != w && g.edge(u, v) && g.edge(v, w) && g.edge(u, w) &&
            !(apply_word(g, {u, v, u, v, w, v, u, w, u}) == g))
            ok = false;
        for (int x = 0; x < n; x++)
            if (g.degree(x) <= 1 && !(apply_word(g, {x}) == g)) ok = false;
        for (int x = 0; x < n; x++)
            for (int y = x + 1; y < n; y++)
                if (g.adj[x] == g.adj[y] && !(apply_word(g, {x, y}) == g)) ok = false;
    }
    if (!ok) detail += "rules ";

    // twist vs local complement on 1000 random words
    bool twist_ok = true;
    for (int t = 0; t < 1000 && twist_ok; t++) {
        int n = 2 + rng() % 7;
        std::vector<int> letters;
        for (int i = 0; i < n; i++) {
            letters.push_back(i);
            letters.push_back(i);
        }
        std::shuffle(letters.begin(), letters.end(), rng);
        Dow w = make_dow(letters);
        int u = rng() % n;
        if (!(alternance_graph(twist(w, u)) ==
              natural_colouring(local_complement(alternance_graph(w), u))))
            twist_ok = false;
    }
    if (!twist_ok) detail += "twist ";
    ok = ok && twist_ok;

    // double-purity equivalence for every bicoloured graph on <= 5 vertices
    bool double_ok = true;
    {
        std::set<CanonKey> seen;
        std::map<CanonKey, bool> cache;
        auto cached_pure = [&](const Graph& g) {
            CanonKey k = canonical_form(g);
            auto it = cache.find(k);
            if (it != cache.end()) return it->second;
            bool p = is_pure(g).pure;
            cache.emplace(k, p);
            return p;
        };
        for (int n = 1; n <= 5 && double_ok; n++)
            for (const Graph& base : all_graphs(n))
                for (const Graph& g : all_colourings(base)) {
                    if (!seen.insert(canonical_form(g)).second) continue;
                    if (cached_pure(g) != cached_pure(double_graph(g))) {
                        double_ok = false;
                        break;
                    }
                }
    }
    if (!double_ok) detail += "double-purity ";
    ok = ok && double_ok;

    // orthogonal cycle decompositions exist exactly off the pure classes,
    // exhaustively over connected 4-regular transition systems on <= 6 vertices
    bool ocd_ok = true;
    {
        std::map<CanonKey, bool> purity;
        size_t cases = 0;
        for (const Multigraph& m : four_regular_multigraphs(6)) {
            bool loops = false;
            for (size_t e = 0; e < m.edges.size(); e++)
                if (m.is_loop(static_cast<int>(e))) loops = true;
            if (loops) continue;
            all_transition_systems(m, [&](const TransitionSystem& s) {
                if (!ocd_ok) return;
                cases++;
                bool exists =
                    orthogonal_cycle_decomposition(m, s, OcdRoute::Backtracking).has_value();
                Graph g = ts_to_bicoloured(m, s);
                CanonKey k = canonical_form(g);
                auto it = purity.find(k);
                bool pure;
                if (it != purity.end()) {
                    pure = it->second;
                } else {
                    ParityClass cls = enumerate_parity_class(g);
                    pure = true;
                    for (const auto& e : cls.entries) {
                        purity.emplace(e.key, false); // provisional; fixed below
                        if (find_black_anticlique(e.rep)) pure = false;
                    }
                    for (const auto& e : cls.entries) purity[e.key] = pure;
                }
                if (exists != !pure) ocd_ok = false;
            });
        }
        if (!ocd_ok) detail += "ocd-vs-purity ";
        detail += "(" + std::to_string(cases) + " transition systems) ";
    }
    ok = ok && ocd_ok;

    // split preservation and decomposition-class invariance
    bool split_ok = true;
    {
        Graph six(6);
        six.add_edge(0, 1);
        six.add_edge(0, 2);
        six.add_edge(1, 3);
        six.add_edge(1, 4);
        six.add_edge(2, 3);
        six.add_edge(2, 4);
        six.add_edge(3, 5);
        six.add_edge(4, 5);
        std::vector<Graph> seeds{natural_colouring(gen_path(4)), natural_colouring(six)};
        std::map<CanonKey, std::string> fp_cache;
        auto fingerprint = [&](const Graph& seed) {
            CanonKey key = canonical_form(seed);
            auto it = fp_cache.find(key);
            if (it != fp_cache.end()) return it->second;
            ParityClass cls = enumerate_parity_class(seed);
            std::string fp;
            for (int idx : cls.sorted_by_key) fp += cls.entries[idx].key + ";";
            for (const auto& e : cls.entries) fp_cache.emplace(e.key, fp);
            return fp;
        };
        for (const Graph& seed : seeds) {
            auto splits = find_splits(seed);
            if (splits.empty()) {
                split_ok = false;
                break;
            }
            Split sp = splits[0];
            // labeled class BFS
            std::vector<Graph> members{seed};
            std::set<std::string> seen{format_graph(seed)};
            for (size_t head = 0; head < members.size(); head++) {
                Graph cur = members[head];
                for (const ParityMove& mv : legal_parity_moves(cur)) {
                    Graph h = parity_complement(cur, mv);
                    if (seen.insert(format_graph(h)).second) members.push_back(h);
                }
            }
            std::multiset<std::multiset<std::string>> base;
            bool first = true;
            for (const Graph& h : members) {
                for (const Split& s : splits)
                    if (!is_split_of(h, s.v1)) split_ok = false;
                auto pairs = essential_decompositions(h, sp);
                std::multiset<std::multiset<std::string>> fps;
                for (size_t i : {size_t(0), size_t(2), size_t(4)}) {
                    if (i >= pairs.size()) break;
                    fps.insert({fingerprint(pairs[i].first), fingerprint(pairs[i].second)});
                }
                if (first) {
                    base = fps;
                    first = false;
                } else if (fps != base) {
                    split_ok = false;
                }
                if (!split_ok) break;
            }
            if (!split_ok) break;
        }
    }
    if (!split_ok) detail += "split-invariance ";
    ok = ok && split_ok;

    report(12, "property suites", ok, detail);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
