#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "purelab/graph.hpp"
#include "purelab/orbit.hpp"
#include "purelab/word.hpp"

namespace purelab {

// Dart-based Eulerian multigraph: loops and multi-edges allowed. Edge e
// owns darts 2e (anchored at u) and 2e+1 (anchored at v); a loop anchors
// both darts at the same vertex.
struct Multigraph {
    struct Edge {
        int u, v;
    };
    int n = 0;
    std::vector<Edge> edges;

    Multigraph() = default;
    explicit Multigraph(int n_) : n(n_) {}
    int add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        edges.push_back({u, v});
        return static_cast<int>(edges.size()) - 1;
    }
    void check_vertex(int u) const {
        if (u < 0 || u >= n) fail(ErrorKind::OutOfRange, "vertex out of range");
    }
    int dart_count() const { return 2 * static_cast<int>(edges.size()); }
    int dart_edge(int d) const { return d >> 1; }
    int other_dart(int d) const { return d ^ 1; }
    int dart_anchor(int d) const { return (d & 1) ? edges[d >> 1].v : edges[d >> 1].u; }
    int dart_far(int d) const { return dart_anchor(d ^ 1); }
    bool is_loop(int e) const { return edges[e].u == edges[e].v; }
    int degree(int v) const {
        int d = 0;
        for (const Edge& e : edges) d += (e.u == v) + (e.v == v);
        return d;
    }
    std::vector<int> darts_at(int v) const {
        std::vector<int> out;
        for (int d = 0; d < dart_count(); d++)
            if (dart_anchor(d) == v) out.push_back(d);
        return out;
    }
    bool connected() const;
};

// Perfect pairing of the darts at every vertex.
struct TransitionSystem {
    std::vector<int> mate; // dart -> dart; -1 where undefined

    int at(int d) const { return mate[d]; }
    bool complete() const {
        for (int m : mate)
            if (m < 0) return false;
        return true;
    }
};

// Transition in edge-set form (vertex, smaller edge, larger edge); a loop
// transition repeats the edge. Orthogonality compares these.
using Trans = std::array<int, 3>;
Trans make_trans(const Multigraph& m, int d1, int d2);
std::set<Trans> transitions_of(const Multigraph& m, const TransitionSystem& s);

// A tour is a cyclic dart sequence: dart i departs its anchor and the next
// dart departs the far end of edge i.
using DartTour = std::vector<int>;
std::set<Trans> transitions_of_tours(const Multigraph& m, const std::vector<DartTour>& tours);

TransitionSystem ts_from_tours(const Multigraph& m, const std::vector<DartTour>& tours);
std::vector<DartTour> tours_of(const Multigraph& m, const TransitionSystem& s);

bool is_admissible(const Multigraph& m, const TransitionSystem& s);

DartTour euler_tour(const Multigraph& m); // Hierholzer

struct KotzigResult {
    DartTour tour;
    std::vector<int> faulty_history; // faulty count after each repair step
};
KotzigResult orthogonal_euler_tour(const Multigraph& m, const TransitionSystem& s);

// Transition graph: vertices are the transitions of s; solid edges inherit
// E(m), broken edges chain each vertex's transitions cyclically.
struct TransitionGraph {
    Multigraph graph;
    std::vector<bool> broken;              // per edge of `graph`
    TransitionSystem natural_ts;           // solid-solid / broken-broken pairs
    std::vector<std::array<int, 2>> trans; // TG vertex -> dart pair of s in m
    std::vector<std::array<int, 2>> vertex_pair; // m vertex -> its TG vertices (degree-4 m)
};
TransitionGraph transition_graph(const Multigraph& m, const TransitionSystem& s,
                                 const std::vector<std::vector<int>>* ordering = nullptr);

// Double occurrence word over letters 0..n_letters-1.
struct Dow {
    std::vector<int> letters;
    int n_letters = 0;
};
Dow make_dow(const std::vector<int>& letters);
bool dow_equivalent(const Dow& a, const Dow& b); // up to rotation and reversal

Graph alternance_graph(const Dow& w); // naturally coloured

Dow twist(const Dow& w, int u);
Dow dow_switch(const Dow& w, int u, int v);

// Alternating Euler tour of a two-2-factor transition graph, with the edge
// walked at each step (edges[i] joins letters[i] and letters[i+1], cyclically).
struct AltTour {
    std::vector<int> letters;
    std::vector<int> edges;
};
AltTour alternating_euler_tour(const TransitionGraph& tg);
Dow dow_of(const AltTour& t);
void twist_tour(AltTour& t, int u);

// Splits a double occurrence word along an anticlique of its alternance
// graph into |A|+1 closed segments.
struct TourSegment {
    std::vector<int> letters;
    std::vector<int> edges; // empty when the input carried no edges
};
std::vector<TourSegment> cycles_from_anticlique(const Dow& w, VertexSet a);
std::vector<TourSegment> cycles_from_anticlique_tour(const AltTour& t, VertexSet a);

Graph double_graph(const Graph& g);
// pairing[i] = {v', v''}; validates h is exactly a double under it.
Graph halve_graph(const Graph& h, const std::vector<std::array<int, 2>>& pairing);

// Connected 4-regular loopless (m, s) -> bicoloured graph on V(m), via the
// transition graph, an alternating tour, its alternance graph and halving.
struct Correspondence {
    TransitionGraph tg;
    AltTour tour;
    Graph alternance; // the double, on TG vertices
    Graph halved;     // bicoloured graph on V(m)
};
Correspondence build_correspondence(const Multigraph& m, const TransitionSystem& s,
                                    Budget budget = {});
Graph ts_to_bicoloured(const Multigraph& m, const TransitionSystem& s, Budget budget = {});

// Orthogonal cycle decomposition; cycles listed as edge-id sequences.
enum class OcdRoute { Auto, Parity, Backtracking };
std::optional<std::vector<std::vector<int>>> orthogonal_cycle_decomposition(
    const Multigraph& m, const TransitionSystem& s, OcdRoute route = OcdRoute::Auto,
    Budget budget = {});
bool verify_ocd(const Multigraph& m, const TransitionSystem& s,
                const std::vector<std::vector<int>>& cycles);

// Transition system defined everywhere except at the degree-4 root z.
struct RootedTS {
    Multigraph m;
    TransitionSystem partial; // mate = -1 exactly on z's darts
    int z;
};
std::vector<TransitionSystem> rooted_ts_completions(const RootedTS& r);
std::vector<std::pair<Multigraph, TransitionSystem>> rooted_ts_identifications(const RootedTS& r);

struct SplitCutReport {
    bool is_split;
    int cut_size;
    bool cross_edge;      // edge of g between the two sides
    bool sides_ok;        // both sides have >= 2 vertices
    bool consistent;      // the stated biconditionals hold for this part
};
SplitCutReport split_edge_cut_check(const Graph& g, const Multigraph& m,
                                    const TransitionSystem& s, VertexSet part,
                                    Budget budget = {});

// Cycle double cover search for cubic bridgeless graphs.
enum class CdcRoute { OneFactor, LineGraph };
struct CdcResult {
    std::optional<std::vector<std::vector<int>>> cycles; // edge ids of g
    bool pure_obstruction = false;                       // route blocked by a pure class
};
CdcResult cdc_route(const Graph& g, CdcRoute route, Budget budget = {});
CdcResult cdc_search(const Graph& g, Budget budget = {});
bool verify_cdc(const Graph& g, const std::vector<std::vector<int>>& cycles);

// Realization of a labeled alternance graph as a DOW (n <= 8 letters).
std::optional<Dow> realize_dow(const Graph& g);

// (m, s) whose tour-induced correspondence lands in [g]: the interlacement
// construction from a DOW realization.
std::pair<Multigraph, TransitionSystem> dow_to_ts(const Dow& w);

bool is_split_of(const Graph& g, VertexSet v1); // shared with split-decomp

// Text format: `mgraph <n> <m>` / `e <id> <u> <v>` / `t <v> : <a,b> ...`
// with loop darts written `id.0` / `id.1` / `end`.
std::string format_mgraph(const Multigraph& m, const TransitionSystem& s);
std::pair<Multigraph, TransitionSystem> parse_mgraph(const std::string& text);

} // namespace purelab
