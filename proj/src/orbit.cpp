#include "purelab/orbit.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "purelab/word.hpp"

namespace purelab {

namespace {

Graph strip_colours(const Graph& g) {
    Graph h = g;
    h.blacks.reset();
    return h;
}

} // namespace

Orbit enumerate_complementation_class(const Graph& g, bool labeled, Budget budget, int jobs) {
    Graph seed = strip_colours(g);
    Orbit orbit;
    if (labeled) {
        std::unordered_set<LabeledKey, LabeledKeyHash> seen;
        std::vector<Graph> states;
        std::deque<size_t> frontier;
        seen.insert(labeled_key(seed));
        states.push_back(seed);
        frontier.push_back(0);
        while (!frontier.empty()) {
            size_t at = frontier.front();
            frontier.pop_front();
            Graph cur = states[at];
            for (int u = 0; u < seed.n; u++) {
                Graph h = local_complement(cur, u);
                if (seen.insert(labeled_key(h)).second) {
                    if (states.size() >= budget.max_states)
                        fail(ErrorKind::BudgetExceeded, "labeled orbit exceeds state budget");
                    frontier.push_back(states.size());
                    states.push_back(h);
                }
            }
        }
        std::map<CanonKey, Graph> reps;
        for (const Graph& h : states) reps.emplace(canonical_form(h), h);
        for (auto& [k, v] : reps) orbit.reps.emplace_back(k, v);
        orbit.labeled = std::move(states);
        return orbit;
    }

    // iso mode: level-synchronous BFS so parallel expansion stays
    // order-deterministic
    std::map<CanonKey, Graph> reps;
    std::vector<Graph> frontier{seed};
    reps.emplace(canonical_form(seed), seed);
    while (!frontier.empty()) {
        std::vector<std::pair<CanonKey, Graph>> found;
        auto expand = [&](const Graph& cur, std::vector<std::pair<CanonKey, Graph>>& out) {
            for (int u = 0; u < seed.n; u++) {
                Graph h = local_complement(cur, u);
                out.emplace_back(canonical_form(h), h);
            }
        };
        if (jobs <= 1 || frontier.size() < 4) {
            for (const Graph& cur : frontier) expand(cur, found);
        } else {
            size_t chunk = (frontier.size() + jobs - 1) / jobs;
            std::vector<std::future<std::vector<std::pair<CanonKey, Graph>>>> futs;
            for (size_t start = 0; start < frontier.size(); start += chunk) {
                size_t end = std::min(frontier.size(), start + chunk);
                futs.push_back(std::async(std::launch::async, [&, start, end]() {
                    std::vector<std::pair<CanonKey, Graph>> local;
                    for (size_t i = start; i < end; i++) expand(frontier[i], local);
                    return local;
                }));
            }
            for (auto& f : futs) {
                auto local = f.get();
                found.insert(found.end(), local.begin(), local.end());
            }
        }
        std::vector<Graph> next;
        for (auto& [key, h] : found) {
            if (reps.size() >= budget.max_states)
                fail(ErrorKind::BudgetExceeded, "orbit exceeds state budget");
            if (reps.emplace(key, h).second) next.push_back(h);
        }
        frontier = std::move(next);
    }
    for (auto& [k, v] : reps) orbit.reps.emplace_back(k, v);
    return orbit;
}

namespace {

// Explicit adjacency of the complementation graph, built once so repeated
// eccentricity sweeps stay cheap.
struct LabeledOrbitGraph {
    std::vector<std::vector<int>> adj;

    explicit LabeledOrbitGraph(const std::vector<Graph>& states) {
        std::unordered_map<LabeledKey, int, LabeledKeyHash> index;
        for (size_t i = 0; i < states.size(); i++)
            index.emplace(labeled_key(states[i]), static_cast<int>(i));
        int n_vertices = states.empty() ? 0 : states[0].n;
        adj.resize(states.size());
        for (size_t i = 0; i < states.size(); i++) {
            for (int u = 0; u < n_vertices; u++) {
                Graph h = local_complement(states[i], u);
                int j = index.at(labeled_key(h));
                if (j != static_cast<int>(i)) adj[i].push_back(j);
            }
            std::sort(adj[i].begin(), adj[i].end());
            adj[i].erase(std::unique(adj[i].begin(), adj[i].end()), adj[i].end());
        }
    }

    int bfs(int src, std::vector<int>& dist) const {
        dist.assign(adj.size(), -1);
        std::vector<int> q{src};
        dist[src] = 0;
        int ecc = 0;
        for (size_t head = 0; head < q.size(); head++) {
            int at = q[head];
            for (int j : adj[at])
                if (dist[j] < 0) {
                    dist[j] = dist[at] + 1;
                    ecc = std::max(ecc, dist[j]);
                    q.push_back(j);
                }
        }
        return ecc;
    }
};

} // namespace

int complementation_diameter(const Graph& g, Budget budget) {
    Orbit orbit = enumerate_complementation_class(g, true, budget);
    const std::vector<Graph>& states = *orbit.labeled;
    if (states.size() <= 1) return 0;
    LabeledOrbitGraph og(states);

    std::vector<int> dist;
    // double sweep for a good lower bound and a central root
    og.bfs(0, dist);
    int a = static_cast<int>(std::max_element(dist.begin(), dist.end()) - dist.begin());
    std::vector<int> dist_a;
    int ecc_a = og.bfs(a, dist_a);
    int b = static_cast<int>(std::max_element(dist_a.begin(), dist_a.end()) - dist_a.begin());
    // midpoint of an a-b geodesic: walk back from b
    std::vector<int> dist_b;
    int ecc_b = og.bfs(b, dist_b);
    int lb = std::max(ecc_a, ecc_b);
    int root = b;
    for (size_t i = 0; i < states.size(); i++) {
        if (dist_a[i] + dist_b[i] == ecc_a && std::abs(dist_a[i] - dist_b[i]) <= 1) {
            root = static_cast<int>(i);
            break;
        }
    }

    // iFUB: process vertices by decreasing level from the root
    std::vector<int> dist_r;
    int ecc_r = og.bfs(root, dist_r);
    lb = std::max(lb, ecc_r);
    std::vector<std::vector<int>> levels(ecc_r + 1);
    for (size_t i = 0; i < states.size(); i++) levels[dist_r[i]].push_back(static_cast<int>(i));
    int ub = 2 * ecc_r;
    int i = ecc_r;
    std::vector<int> tmp;
    while (ub > lb && i > 0) {
        for (int v : levels[i]) lb = std::max(lb, og.bfs(v, tmp));
        ub = 2 * (i - 1);
        i -= 1;
    }
    return lb;
}

bool complement_reachable(const Graph& g) {
    // strongly regular mod 2 with parameters (1, 0, 0, 1)
    if (g.n % 2 != 1) return false;
    for (int u = 0; u < g.n; u++)
        if (g.degree(u) % 2 != 0) return false;
    for (int u = 0; u < g.n; u++) {
        for (int v = u + 1; v < g.n; v++) {
            int common = std::popcount(g.adj[u] & g.adj[v]);
            if (g.edge(u, v)) {
                if (common % 2 != 0) return false;
            } else {
                if (common % 2 != 1) return false;
            }
        }
    }
    return true;
}

bool complement_reachable_bfs(const Graph& g, Budget budget) {
    Graph seed = strip_colours(g);
    Graph target = complement_graph(seed);
    if (seed == target) return true;
    std::unordered_set<LabeledKey, LabeledKeyHash> seen;
    std::deque<Graph> queue{seed};
    seen.insert(labeled_key(seed));
    while (!queue.empty()) {
        Graph cur = queue.front();
        queue.pop_front();
        for (int u = 0; u < seed.n; u++) {
            Graph h = local_complement(cur, u);
            if (h == target) return true;
            if (seen.insert(labeled_key(h)).second) {
                if (seen.size() > budget.max_states)
                    fail(ErrorKind::BudgetExceeded, "complement search exceeds budget");
                queue.push_back(h);
            }
        }
    }
    return false;
}

} // namespace purelab
