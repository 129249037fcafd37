#include "purelab/split.hpp"

#include <map>
#include <set>
#include <sstream>

#include "purelab/euler.hpp"
#include "purelab/families.hpp"
#include "purelab/parity.hpp"
#include "purelab/word.hpp"

namespace purelab {

std::vector<Split> find_splits(const Graph& g) {
    std::vector<Split> out;
    if (g.n < 4) return out;
    if (g.n > 22) fail(ErrorKind::BudgetExceeded, "split scan capped at 22 vertices");
    uint64_t all = g.vertex_mask();
    // vertex 0 stays in v1, so each split appears once
    uint64_t half = 1ULL << (g.n - 1);
    for (uint64_t rest = 0; rest < half; rest++) {
        uint64_t v1 = (rest << 1) | 1;
        if (std::popcount(v1) < 2 || std::popcount(all & ~v1) < 2) continue;
        if (is_split_of(g, VertexSet(v1))) out.push_back({VertexSet(v1), VertexSet(all & ~v1)});
    }
    return out;
}

std::pair<RootedGraph, RootedGraph> induced_rooted_graphs(const Graph& g, const Split& s) {
    if ((s.v1.bits | s.v2.bits) != g.vertex_mask() || (s.v1.bits & s.v2.bits))
        fail(ErrorKind::NotASplit, "sides must partition the vertices");
    if (!is_split_of(g, s.v1)) fail(ErrorKind::NotASplit, "not a split");
    auto build = [&](VertexSet keep, VertexSet other) {
        std::vector<int> verts = keep.to_vector();
        int k = static_cast<int>(verts.size());
        Graph h(k + 1);
        h.blacks = 0;
        for (int i = 0; i < k; i++) {
            if (g.coloured()) h.set_colour(i, g.colour(verts[i]));
            for (int j = i + 1; j < k; j++)
                if (g.edge(verts[i], verts[j])) h.add_edge(i, j);
            // root adjacency: frontier of `keep`
            if (g.adj[verts[i]] & other.bits) h.add_edge(i, k);
        }
        return RootedGraph{h, k};
    };
    return {build(s.v1, s.v2), build(s.v2, s.v1)};
}

namespace {

Graph complement_at_root_as_white(const Graph& g, int root) {
    Graph h = local_complement(g, root);
    h.flip_colours(g.adj[root]);
    return h;
}

} // namespace

RootGraphs root_graphs(const RootedGraph& rg) {
    RootGraphs out{rg.g, rg.g, {}};
    out.rw.set_colour(rg.root, Colour::White);
    out.rb.set_colour(rg.root, Colour::Black);
    Graph rc = complement_at_root_as_white(rg.g, rg.root);
    rc.set_colour(rg.root, Colour::Black);
    out.rc = rc;
    return out;
}

LeafGraphs leaf_graphs(const RootedGraph& rg, std::optional<int> v) {
    LeafGraphs out{delete_vertex(rg.g, rg.root),
                   delete_vertex(complement_at_root_as_white(rg.g, rg.root), rg.root),
                   std::nullopt, -1};
    uint64_t nb = rg.g.adj[rg.root];
    if (v) {
        rg.g.check_vertex(*v);
        if (!nb) fail(ErrorKind::RootIsolated, "no lc at an isolated root");
        if (!rg.g.edge(rg.root, *v)) fail(ErrorKind::NonAdjacent, "lc vertex must neighbour the root");
        out.lc_vertex = *v;
    } else if (nb) {
        out.lc_vertex = std::countr_zero(nb); // lowest-numbered neighbour
    } else {
        return out; // root isolated: lw = lb, no lc
    }
    Graph black_root = rg.g;
    black_root.set_colour(rg.root, Colour::Black);
    out.lc = delete_vertex(couple_complement(black_root, rg.root, out.lc_vertex), rg.root);
    return out;
}

std::vector<std::pair<Graph, Graph>> essential_decompositions(const Graph& g, const Split& s) {
    auto [g1, g2] = induced_rooted_graphs(g, s);
    RootGraphs r1 = root_graphs(g1), r2 = root_graphs(g2);
    LeafGraphs l1 = leaf_graphs(g1), l2 = leaf_graphs(g2);
    std::vector<std::pair<Graph, Graph>> out;
    out.push_back({r1.rw, l2.lw});
    out.push_back({r2.rw, l1.lw});
    out.push_back({r1.rb, l2.lb});
    out.push_back({r2.rb, l1.lb});
    bool cross = false;
    for (int u : s.v1.to_vector())
        if (g.adj[u] & s.v2.bits) cross = true;
    if (cross) {
        out.push_back({r1.rc, *l2.lc});
        out.push_back({r2.rc, *l1.lc});
    } else {
        Graph empty(0);
        empty.blacks = 0;
        out.push_back({empty, empty});
    }
    return out;
}

namespace {

const std::set<CanonKey>& pentagon_class_keys() {
    static const std::set<CanonKey> keys = [] {
        Graph c5 = natural_colouring(gen_cycle(5));
        std::set<CanonKey> out;
        for (const auto& e : enumerate_parity_class(c5).entries) out.insert(e.key);
        return out;
    }();
    return keys;
}

std::optional<PurityCert> certify(const Graph& g, Budget budget, int depth,
                                  std::map<CanonKey, bool>& memo) {
    CanonKey key = canonical_form(g);
    auto mit = memo.find(key);
    if (mit != memo.end() && !mit->second) return std::nullopt;

    auto make_base = [&](PurityCert::Kind kind) {
        PurityCert cert;
        cert.kind = kind;
        cert.key = key;
        memo[key] = true;
        return cert;
    };
    // base cases: the two known smallest pure classes, then direct search
    if (g.n == 1 && g.is_white(0)) return make_base(PurityCert::BaseK1);
    if (pentagon_class_keys().count(key)) return make_base(PurityCert::BasePentagon);
    if (g.n <= 6) {
        if (is_pure(g, budget).pure) return make_base(PurityCert::BaseSmall);
        memo[key] = false;
        return std::nullopt;
    }
    if (depth <= 0) return std::nullopt;

    // disconnected graphs are pure iff some component is
    std::vector<uint64_t> comps = components(g, g.vertex_mask());
    if (comps.size() > 1) {
        for (uint64_t c : comps) {
            auto sub = certify(induced_subgraph(g, VertexSet(c)), budget, depth - 1, memo);
            if (sub) {
                PurityCert cert;
                cert.kind = PurityCert::ByComponent;
                cert.key = key;
                cert.left = std::make_unique<PurityCert>(std::move(*sub));
                memo[key] = true;
                return cert;
            }
        }
        memo[key] = false;
        return std::nullopt;
    }

    for (const Split& s : find_splits(g)) {
        auto pairs = essential_decompositions(g, s);
        for (size_t i = 0; i < pairs.size(); i++) {
            if (pairs[i].first.n == 0) continue; // empty-pair convention
            auto lc = certify(pairs[i].first, budget, depth - 1, memo);
            if (!lc) continue;
            auto rc = certify(pairs[i].second, budget, depth - 1, memo);
            if (!rc) continue;
            PurityCert cert;
            cert.kind = PurityCert::BySplit;
            cert.key = key;
            cert.split = s;
            cert.pair_index = static_cast<int>(i);
            cert.left = std::make_unique<PurityCert>(std::move(*lc));
            cert.right = std::make_unique<PurityCert>(std::move(*rc));
            memo[key] = true;
            return cert;
        }
    }
    return std::nullopt; // no proof; says nothing about impurity
}

} // namespace

std::optional<PurityCert> purity_by_decomposition(const Graph& g, Budget budget) {
    if (!g.coloured()) fail(ErrorKind::IllegalMove, "purity needs a bicoloured graph");
    std::map<CanonKey, bool> memo;
    return certify(g, budget, g.n, memo);
}

std::string format_cert(const PurityCert& cert) {
    std::ostringstream out;
    switch (cert.kind) {
        case PurityCert::BaseK1:
            out << "(base k1)";
            break;
        case PurityCert::BasePentagon:
            out << "(base pentagon)";
            break;
        case PurityCert::BaseSmall:
            out << "(base small " << key_to_hex(cert.key) << ")";
            break;
        case PurityCert::ByComponent:
            out << "(pure " << key_to_hex(cert.key) << " by-component " << format_cert(*cert.left)
                << ")";
            break;
        case PurityCert::BySplit: {
            out << "(pure " << key_to_hex(cert.key) << " by-split (v1";
            for (int v : cert.split.v1.to_vector()) out << " " << v;
            out << ") (v2";
            for (int v : cert.split.v2.to_vector()) out << " " << v;
            out << ") left " << format_cert(*cert.left) << " right " << format_cert(*cert.right)
                << ")";
            break;
        }
    }
    return out.str();
}

VertexSet critical_vertices(const Graph& g, Budget budget) {
    if (!is_pure(g, budget).pure) fail(ErrorKind::NotPure, "critical vertices need a pure graph");
    VertexSet out;
    for (int u = 0; u < g.n; u++) {
        // root graphs induced by u: forget u's colour, rebuild with u last
        std::vector<int> verts;
        for (int v = 0; v < g.n; v++)
            if (v != u) verts.push_back(v);
        verts.push_back(u);
        Graph h(g.n);
        h.blacks = 0;
        for (int i = 0; i < g.n; i++)
            for (int j = i + 1; j < g.n; j++)
                if (g.edge(verts[i], verts[j])) h.add_edge(i, j);
        for (int i = 0; i + 1 < g.n; i++) h.set_colour(i, g.colour(verts[i]));
        RootedGraph rg{h, g.n - 1};
        RootGraphs roots = root_graphs(rg);
        bool isolated = g.degree(u) == 0;
        std::vector<Graph> candidates{roots.rw, roots.rb};
        if (!isolated) candidates.push_back(roots.rc);
        for (const Graph& cand : candidates)
            if (!is_pure(cand, budget).pure) {
                out.add(u);
                break;
            }
    }
    return out;
}

VertexSet tight_vertices(const Graph& g, Budget budget) {
    if (!is_pure(g, budget).pure) fail(ErrorKind::NotPure, "tight vertices need a pure graph");
    VertexSet out;
    for (int u = 0; u < g.n; u++) {
        Graph h = delete_vertex(g, u);
        if (!is_pure(h, budget).pure) out.add(u);
    }
    return out;
}

} // namespace purelab
