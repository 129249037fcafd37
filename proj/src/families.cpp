#include "purelab/families.hpp"

namespace purelab {

Graph gen_cycle(int n) {
    if (n < 3) fail(ErrorKind::InvalidParams, "cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; i++) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph gen_path(int n) {
    if (n < 1) fail(ErrorKind::InvalidParams, "path needs n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; i++) g.add_edge(i, i + 1);
    return g;
}

Graph gen_complete(int n) {
    if (n < 1) fail(ErrorKind::InvalidParams, "complete graph needs n >= 1");
    Graph g(n);
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) g.add_edge(i, j);
    return g;
}

Graph gen_circulant(const CirculantSpec& spec) {
    int n = spec.modulus;
    if (n < 1) fail(ErrorKind::InvalidParams, "circulant needs modulus >= 1");
    std::set<int> conn;
    for (int s : spec.connection) {
        int r = ((s % n) + n) % n;
        if (r == 0) fail(ErrorKind::InvalidParams, "0 not allowed in a connection set");
        conn.insert(r);
        conn.insert(n - r);
    }
    Graph g(n);
    for (int x = 0; x < n; x++)
        for (int s : conn) {
            int y = (x + s) % n;
            if (x < y) g.add_edge(x, y);
        }
    return g;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; d++)
        if (n % d == 0) return false;
    return true;
}

std::set<int> quadratic_residues(int p) {
    if (!is_prime(p) || p == 2) fail(ErrorKind::InvalidParams, "need an odd prime");
    std::set<int> out;
    for (int x = 1; x < p; x++) out.insert(static_cast<int>((1LL * x * x) % p));
    return out;
}

Graph gen_paley(int p) {
    if (!is_prime(p)) fail(ErrorKind::InvalidParams, "Paley order must be prime here");
    if (p % 4 != 1) fail(ErrorKind::InvalidParams, "Paley graphs need p = 1 mod 4");
    return gen_circulant({p, quadratic_residues(p)});
}

Graph gen_pentagon_bouquet(int m) {
    if (m < 1) fail(ErrorKind::InvalidParams, "bouquet needs m >= 1");
    Graph g(4 * m + 1);
    for (int i = 0; i < m; i++) {
        int base = 4 * i + 1;
        g.add_edge(0, base);
        g.add_edge(base, base + 1);
        g.add_edge(base + 1, base + 2);
        g.add_edge(base + 2, base + 3);
        g.add_edge(base + 3, 0);
    }
    return g;
}

Graph gen_fdf_chain(int m) {
    if (m < 1) fail(ErrorKind::InvalidParams, "chain needs m >= 1");
    // cut vertices first: vertex i carries the i-th pentagon pair
    Graph g(9 * m);
    for (int i = 0; i + 1 < m; i++) g.add_edge(i, i + 1);
    for (int i = 0; i < m; i++) {
        int base = m + 8 * i;
        for (int side = 0; side < 2; side++) {
            int a = base + 4 * side;
            g.add_edge(i, a);
            g.add_edge(a, a + 1);
            g.add_edge(a + 1, a + 2);
            g.add_edge(a + 2, a + 3);
            g.add_edge(a + 3, i);
        }
    }
    return g;
}

std::pair<Multigraph, TransitionSystem> gen_k5_two_pentagons_ts() {
    Multigraph m(5);
    auto add_cycle = [&m](std::vector<int> vs) {
        DartTour tour;
        for (size_t i = 0; i < vs.size(); i++) {
            int e = m.add_edge(vs[i], vs[(i + 1) % vs.size()]);
            tour.push_back(2 * e);
        }
        return tour;
    };
    DartTour t1 = add_cycle({0, 1, 2, 3, 4});
    DartTour t2 = add_cycle({0, 2, 4, 1, 3});
    return {m, ts_from_tours(m, {t1, t2})};
}

Graph gen_petersen() {
    Graph g(10);
    for (int i = 0; i < 5; i++) {
        g.add_edge(i, (i + 1) % 5);      // outer cycle
        g.add_edge(i, i + 5);            // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5); // pentagram
    }
    return g;
}

bool strongly_regular_mod(const Graph& g, int s, int v, int k, int lambda, int mu) {
    if (s < 2) fail(ErrorKind::InvalidParams, "modulus must be >= 2");
    auto cong = [s](int a, int b) { return ((a - b) % s + s) % s == 0; };
    if (!cong(g.n, v)) return false;
    for (int u = 0; u < g.n; u++)
        if (!cong(g.degree(u), k)) return false;
    for (int a = 0; a < g.n; a++)
        for (int b = a + 1; b < g.n; b++) {
            int common = std::popcount(g.adj[a] & g.adj[b]);
            if (g.edge(a, b) ? !cong(common, lambda) : !cong(common, mu)) return false;
        }
    return true;
}

} // namespace purelab
