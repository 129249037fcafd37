// Multigraph plumbing: tours, transition systems, admissibility, the
// orthogonal Euler tour repair loop, and transition graphs.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

#include "purelab/euler.hpp"

namespace purelab {

bool Multigraph::connected() const {
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::deque<int> q;
    // start anywhere with an edge; isolated vertices make the graph
    // disconnected unless n == 1
    q.push_back(0);
    seen[0] = true;
    while (!q.empty()) {
        int at = q.front();
        q.pop_front();
        for (const Edge& e : edges) {
            if (e.u == at && !seen[e.v]) {
                seen[e.v] = true;
                q.push_back(e.v);
            }
            if (e.v == at && !seen[e.u]) {
                seen[e.u] = true;
                q.push_back(e.u);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Trans make_trans(const Multigraph& m, int d1, int d2) {
    int v = m.dart_anchor(d1);
    if (m.dart_anchor(d2) != v) fail(ErrorKind::Internal, "transition darts at different vertices");
    int e1 = m.dart_edge(d1), e2 = m.dart_edge(d2);
    if (e1 > e2) std::swap(e1, e2);
    return {v, e1, e2};
}

std::set<Trans> transitions_of(const Multigraph& m, const TransitionSystem& s) {
    std::set<Trans> out;
    for (int d = 0; d < m.dart_count(); d++) {
        int e = s.at(d);
        if (e >= 0) out.insert(make_trans(m, d, e));
    }
    return out;
}

std::set<Trans> transitions_of_tours(const Multigraph& m, const std::vector<DartTour>& tours) {
    std::set<Trans> out;
    for (const DartTour& t : tours) {
        size_t k = t.size();
        for (size_t i = 0; i < k; i++) {
            int arrive = m.other_dart(t[i]);
            int depart = t[(i + 1) % k];
            out.insert(make_trans(m, arrive, depart));
        }
    }
    return out;
}

TransitionSystem ts_from_tours(const Multigraph& m, const std::vector<DartTour>& tours) {
    std::vector<int> used(m.edges.size(), 0);
    TransitionSystem s;
    s.mate.assign(m.dart_count(), -1);
    for (const DartTour& t : tours) {
        if (t.empty()) fail(ErrorKind::NotADecomposition, "empty tour");
        size_t k = t.size();
        for (size_t i = 0; i < k; i++) {
            int d = t[i];
            if (d < 0 || d >= m.dart_count()) fail(ErrorKind::NotADecomposition, "bad dart id");
            used[m.dart_edge(d)]++;
            int next = t[(i + 1) % k];
            int arrive = m.other_dart(d);
            if (m.dart_anchor(arrive) != m.dart_anchor(next))
                fail(ErrorKind::NotADecomposition, "tour darts do not chain");
            if (s.mate[arrive] != -1 || s.mate[next] != -1)
                fail(ErrorKind::NotADecomposition, "dart paired twice");
            s.mate[arrive] = next;
            s.mate[next] = arrive;
        }
    }
    for (size_t e = 0; e < m.edges.size(); e++)
        if (used[e] != 1) fail(ErrorKind::NotADecomposition, "edges not covered exactly once");
    return s;
}

std::vector<DartTour> tours_of(const Multigraph& m, const TransitionSystem& s) {
    std::vector<bool> used(m.dart_count(), false);
    std::vector<DartTour> tours;
    for (int start = 0; start < m.dart_count(); start++) {
        if (used[start] || used[m.other_dart(start)]) continue;
        DartTour tour;
        int d = start;
        while (true) {
            tour.push_back(d);
            used[d] = true;
            used[m.other_dart(d)] = true;
            int next = s.at(m.other_dart(d));
            if (next < 0) fail(ErrorKind::Internal, "incomplete transition system");
            if (next == start) break;
            d = next;
        }
        tours.push_back(tour);
    }
    return tours;
}

namespace {

// Biconnected components over darts; returns per-edge block ids.
std::vector<int> edge_blocks(const Multigraph& m) {
    int n = m.n;
    std::vector<std::vector<std::pair<int, int>>> inc(n); // (neighbour, edge)
    for (size_t e = 0; e < m.edges.size(); e++) {
        inc[m.edges[e].u].push_back({m.edges[e].v, static_cast<int>(e)});
        if (!m.is_loop(static_cast<int>(e)))
            inc[m.edges[e].v].push_back({m.edges[e].u, static_cast<int>(e)});
    }
    std::vector<int> block(m.edges.size(), -1);
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> stack; // (edge)
    int timer = 0, blocks = 0;

    std::function<void(int, int)> dfs = [&](int u, int pe) {
        disc[u] = low[u] = timer++;
        for (auto [v, e] : inc[u]) {
            if (e == pe) continue;
            if (m.is_loop(e)) {
                if (block[e] < 0) block[e] = blocks++; // a loop is its own block
                continue;
            }
            if (disc[v] < 0) {
                stack.push_back({u, e});
                dfs(v, e);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    int id = blocks++;
                    while (true) {
                        auto [su, se] = stack.back();
                        stack.pop_back();
                        block[se] = id;
                        if (se == e) break;
                    }
                }
            } else if (disc[v] < disc[u]) {
                stack.push_back({u, e});
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    for (int u = 0; u < n; u++)
        if (disc[u] < 0) dfs(u, -1);
    return block;
}

} // namespace

bool is_admissible(const Multigraph& m, const TransitionSystem& s) {
    for (int v = 0; v < m.n; v++)
        if (m.degree(v) < 2) fail(ErrorKind::DegreeTooSmall, "admissibility needs degree >= 2");
    std::vector<int> block = edge_blocks(m);
    // degree of each vertex within each block
    std::map<std::pair<int, int>, int> block_degree;
    for (int d = 0; d < m.dart_count(); d++)
        block_degree[{m.dart_anchor(d), block[m.dart_edge(d)]}]++;
    for (int d = 0; d < m.dart_count(); d++) {
        int e = s.at(d);
        if (e < 0 || e < d) continue;
        int e1 = m.dart_edge(d), e2 = m.dart_edge(e);
        if (e1 == e2) return false; // loop transition
        if (block[e1] != block[e2]) continue;
        int v = m.dart_anchor(d);
        if (block_degree[{v, block[e1]}] == 2) return false; // forced transition
    }
    return true;
}

DartTour euler_tour(const Multigraph& m) {
    for (int v = 0; v < m.n; v++)
        if (m.degree(v) % 2 != 0) fail(ErrorKind::NotEulerian, "odd degree vertex");
    if (!m.connected()) fail(ErrorKind::NotConnected, "graph not connected");
    if (m.edges.empty()) return {};
    // Hierholzer over darts
    std::vector<std::vector<int>> at(m.n);
    for (int d = 0; d < m.dart_count(); d++) at[m.dart_anchor(d)].push_back(d);
    std::vector<bool> used_edge(m.edges.size(), false);
    std::vector<size_t> cursor(m.n, 0);
    std::vector<int> stack_vertices{m.edges[0].u};
    std::vector<int> stack_darts;
    DartTour tour;
    while (!stack_vertices.empty()) {
        int v = stack_vertices.back();
        bool advanced = false;
        while (cursor[v] < at[v].size()) {
            int d = at[v][cursor[v]++];
            if (used_edge[m.dart_edge(d)]) continue;
            used_edge[m.dart_edge(d)] = true;
            stack_vertices.push_back(m.dart_far(d));
            stack_darts.push_back(d);
            advanced = true;
            break;
        }
        if (!advanced) {
            stack_vertices.pop_back();
            if (!stack_darts.empty()) {
                tour.push_back(stack_darts.back());
                stack_darts.pop_back();
            }
        }
    }
    std::reverse(tour.begin(), tour.end());
    if (tour.size() != m.edges.size()) fail(ErrorKind::Internal, "Euler tour missed edges");
    return tour;
}

namespace {

int count_faulty(const Multigraph& m, const DartTour& tour, const std::set<Trans>& forbidden) {
    int c = 0;
    size_t k = tour.size();
    for (size_t i = 0; i < k; i++) {
        int arrive = m.other_dart(tour[i]);
        int depart = tour[(i + 1) % k];
        if (forbidden.count(make_trans(m, arrive, depart))) c++;
    }
    return c;
}

// Reverse the tour segment between visit i (exclusive of its arrival) and
// visit j, producing transitions {arr_i, arr_j} and {dep_i, dep_j}.
DartTour reroute(const Multigraph& m, const DartTour& tour, size_t i, size_t j) {
    // positions i..j-1 are the departure darts of the reversed stretch
    DartTour out;
    size_t k = tour.size();
    out.reserve(k);
    for (size_t a = 0; a < i; a++) out.push_back(tour[a]);
    for (size_t a = j; a-- > i;) out.push_back(m.other_dart(tour[a]));
    for (size_t a = j; a < k; a++) out.push_back(tour[a]);
    return out;
}

} // namespace

KotzigResult orthogonal_euler_tour(const Multigraph& m, const TransitionSystem& s) {
    for (int v = 0; v < m.n; v++) {
        int deg = m.degree(v);
        if (deg % 2 != 0) fail(ErrorKind::NotEulerian, "odd degree vertex");
        if (deg > 0 && deg < 4) fail(ErrorKind::DegreeTooSmall, "orthogonal tours need degree >= 4");
    }
    if (!m.connected()) fail(ErrorKind::NotEulerian, "graph not connected");
    // loop condition at degree-4 vertices
    for (size_t e = 0; e < m.edges.size(); e++) {
        if (!m.is_loop(static_cast<int>(e))) continue;
        int v = m.edges[e].u;
        if (m.degree(v) == 4 && s.at(2 * static_cast<int>(e)) != 2 * static_cast<int>(e) + 1)
            fail(ErrorKind::LoopObstruction,
                 "loop transition at a degree-4 vertex must be in the transition system");
    }
    std::set<Trans> forbidden = transitions_of(m, s);
    KotzigResult result;
    result.tour = euler_tour(m);
    int faulty = count_faulty(m, result.tour, forbidden);
    result.faulty_history.push_back(faulty);

    size_t guard = 4 * m.edges.size() * m.edges.size() + 16;
    while (faulty > 0) {
        if (guard-- == 0) fail(ErrorKind::Internal, "repair loop made no progress");
        size_t k = result.tour.size();
        // locate the first faulty transition
        size_t fi = k;
        for (size_t i = 0; i < k; i++) {
            int arrive = m.other_dart(result.tour[i]);
            int depart = result.tour[(i + 1) % k];
            if (forbidden.count(make_trans(m, arrive, depart))) {
                fi = (i + 1) % k; // visit index: position whose departure is tour[fi]
                break;
            }
        }
        if (fi == k) fail(ErrorKind::Internal, "faulty count out of sync");
        int v = m.dart_anchor(result.tour[fi]);
        // other visits of v: positions whose departure dart anchors at v
        int best_faulty = faulty;
        DartTour best;
        for (size_t j = 0; j < k; j++) {
            if (j == fi || m.dart_anchor(result.tour[j]) != v) continue;
            size_t a = std::min(fi, j), b = std::max(fi, j);
            DartTour cand = reroute(m, result.tour, a, b);
            int cf = count_faulty(m, cand, forbidden);
            if (cf < best_faulty) {
                best_faulty = cf;
                best = std::move(cand);
            }
        }
        if (best.empty()) fail(ErrorKind::Internal, "no faulty-reducing reroute found");
        result.tour = std::move(best);
        faulty = best_faulty;
        result.faulty_history.push_back(faulty);
    }
    return result;
}

TransitionGraph transition_graph(const Multigraph& m, const TransitionSystem& s,
                                 const std::vector<std::vector<int>>* ordering) {
    for (int v = 0; v < m.n; v++)
        if (m.degree(v) <= 2) fail(ErrorKind::DegreeTooSmall, "transition graphs need degree > 2");
    if (!s.complete()) fail(ErrorKind::Internal, "transition system incomplete");

    TransitionGraph tg;
    // transitions in deterministic order: per vertex, by smallest dart
    std::vector<int> trans_of_dart(m.dart_count(), -1);
    std::vector<std::vector<int>> per_vertex(m.n);
    for (int v = 0; v < m.n; v++) {
        for (int d = 0; d < m.dart_count(); d++) {
            if (m.dart_anchor(d) != v || trans_of_dart[d] >= 0) continue;
            int id = static_cast<int>(tg.trans.size());
            tg.trans.push_back({d, s.at(d)});
            trans_of_dart[d] = id;
            trans_of_dart[s.at(d)] = id;
            per_vertex[v].push_back(id);
        }
    }
    tg.graph = Multigraph(static_cast<int>(tg.trans.size()));
    // solid edges: one per edge of m, joining the transitions of its darts
    for (size_t e = 0; e < m.edges.size(); e++) {
        int t1 = trans_of_dart[2 * e];
        int t2 = trans_of_dart[2 * e + 1];
        tg.graph.add_edge(t1, t2); // t1 == t2 gives the loop of a loop transition
        tg.broken.push_back(false);
    }
    // broken edges: cyclic chain per vertex in the requested order
    for (int v = 0; v < m.n; v++) {
        std::vector<int> order = per_vertex[v];
        if (ordering) {
            if ((*ordering)[v].size() != order.size())
                fail(ErrorKind::InvalidParams, "ordering size mismatch");
            order = (*ordering)[v];
        }
        int k = static_cast<int>(order.size());
        if (k == 1) fail(ErrorKind::DegreeTooSmall, "degree-2 vertex in transition graph");
        for (int i = 0; i < k; i++) { // k == 2 yields a digon
            int a = order[i], b = order[(i + 1) % k];
            tg.graph.add_edge(a, b);
            tg.broken.push_back(true);
        }
    }
    // natural TS: pair solid with solid and broken with broken at each vertex
    tg.natural_ts.mate.assign(tg.graph.dart_count(), -1);
    for (int t = 0; t < tg.graph.n; t++) {
        std::vector<int> solid, broken_darts;
        for (int d = 0; d < tg.graph.dart_count(); d++) {
            if (tg.graph.dart_anchor(d) != t) continue;
            (tg.broken[tg.graph.dart_edge(d)] ? broken_darts : solid).push_back(d);
        }
        if (solid.size() != 2 || broken_darts.size() != 2)
            fail(ErrorKind::Internal, "transition graph is not 4-regular");
        tg.natural_ts.mate[solid[0]] = solid[1];
        tg.natural_ts.mate[solid[1]] = solid[0];
        tg.natural_ts.mate[broken_darts[0]] = broken_darts[1];
        tg.natural_ts.mate[broken_darts[1]] = broken_darts[0];
    }
    // record the per-vertex transition pair for 4-regular inputs
    tg.vertex_pair.assign(m.n, {-1, -1});
    for (int v = 0; v < m.n; v++) {
        if (per_vertex[v].size() == 2)
            tg.vertex_pair[v] = {per_vertex[v][0], per_vertex[v][1]};
    }
    return tg;
}

namespace {

std::string dart_token(const Multigraph& m, int d) {
    int e = m.dart_edge(d);
    if (m.is_loop(e)) return std::to_string(e) + "." + std::to_string(d & 1);
    return std::to_string(e);
}

int parse_dart_token(const Multigraph& m, int v, const std::string& tok, int lineno) {
    size_t dot = tok.find('.');
    int e, side = -1;
    try {
        e = std::stoi(tok.substr(0, dot));
        if (dot != std::string::npos) side = std::stoi(tok.substr(dot + 1));
    } catch (...) {
        fail(ErrorKind::Format, "bad dart token at line " + std::to_string(lineno));
    }
    if (e < 0 || e >= static_cast<int>(m.edges.size()))
        fail(ErrorKind::Format, "edge id out of range at line " + std::to_string(lineno));
    if (m.is_loop(e)) {
        if (side != 0 && side != 1)
            fail(ErrorKind::Format, "loop darts need .0/.1 at line " + std::to_string(lineno));
        if (m.edges[e].u != v) fail(ErrorKind::Format, "loop not at this vertex");
        return 2 * e + side;
    }
    if (m.edges[e].u == v) return 2 * e;
    if (m.edges[e].v == v) return 2 * e + 1;
    fail(ErrorKind::Format, "edge " + tok + " not incident with vertex " + std::to_string(v));
}

} // namespace

std::string format_mgraph(const Multigraph& m, const TransitionSystem& s) {
    std::ostringstream out;
    out << "mgraph " << m.n << " " << m.edges.size() << "\n";
    for (size_t e = 0; e < m.edges.size(); e++)
        out << "e " << e << " " << m.edges[e].u << " " << m.edges[e].v << "\n";
    for (int v = 0; v < m.n; v++) {
        std::vector<std::pair<int, int>> pairs;
        for (int d = 0; d < m.dart_count(); d++) {
            int e = s.at(d);
            if (e < 0 || e < d || m.dart_anchor(d) != v) continue;
            pairs.push_back({d, e});
        }
        if (pairs.empty() && m.degree(v) == 0) continue;
        out << "t " << v << " :";
        for (auto [a, b] : pairs) out << " " << dart_token(m, a) << "," << dart_token(m, b);
        out << "\n";
    }
    out << "end\n";
    return out.str();
}

std::pair<Multigraph, TransitionSystem> parse_mgraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Multigraph m;
    TransitionSystem s;
    bool open = false, closed = false;
    int expected_edges = 0, lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok[0] == '#') continue;
        if (tok == "mgraph") {
            int n;
            if (open || !(ls >> n >> expected_edges) || n < 0)
                fail(ErrorKind::Format, "bad mgraph header at line " + std::to_string(lineno));
            m = Multigraph(n);
            open = true;
        } else if (tok == "e") {
            int id, u, v;
            if (!open || !(ls >> id >> u >> v))
                fail(ErrorKind::Format, "bad edge line " + std::to_string(lineno));
            if (id != static_cast<int>(m.edges.size()))
                fail(ErrorKind::Format, "edge ids must be consecutive from 0");
            m.add_edge(u, v);
        } else if (tok == "t") {
            int v;
            std::string colon;
            if (!open || !(ls >> v >> colon) || colon != ":")
                fail(ErrorKind::Format, "bad transition line " + std::to_string(lineno));
            if (s.mate.empty()) s.mate.assign(m.dart_count(), -1);
            std::string pair;
            while (ls >> pair) {
                size_t comma = pair.find(',');
                if (comma == std::string::npos)
                    fail(ErrorKind::Format, "transition needs a comma at line " + std::to_string(lineno));
                int d1 = parse_dart_token(m, v, pair.substr(0, comma), lineno);
                int d2 = parse_dart_token(m, v, pair.substr(comma + 1), lineno);
                if (s.mate[d1] != -1 || s.mate[d2] != -1 || d1 == d2)
                    fail(ErrorKind::Format, "dart paired twice at line " + std::to_string(lineno));
                s.mate[d1] = d2;
                s.mate[d2] = d1;
            }
        } else if (tok == "end") {
            closed = true;
            break;
        } else {
            fail(ErrorKind::Format, "unknown token '" + tok + "' at line " + std::to_string(lineno));
        }
    }
    if (!open || !closed) fail(ErrorKind::Format, "unterminated mgraph block");
    if (static_cast<int>(m.edges.size()) != expected_edges)
        fail(ErrorKind::Format, "edge count mismatch");
    if (s.mate.empty()) s.mate.assign(m.dart_count(), -1);
    return {m, s};
}

} // namespace purelab

