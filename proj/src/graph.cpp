#include "purelab/graph.hpp"

#include <istream>
#include <sstream>

namespace purelab {

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (s.bits & ~g.vertex_mask()) fail(ErrorKind::OutOfRange, "subset vertex out of range");
    std::vector<int> verts = s.to_vector(); // ascending original order
    Graph h(static_cast<int>(verts.size()));
    if (g.coloured()) h.blacks = 0;
    for (int i = 0; i < h.n; i++) {
        for (int j = i + 1; j < h.n; j++)
            if (g.edge(verts[i], verts[j])) h.toggle_edge(i, j);
        if (g.coloured()) h.set_colour(i, g.colour(verts[i]));
    }
    return h;
}

Graph delete_vertex(const Graph& g, int u) {
    g.check_vertex(u);
    VertexSet s = VertexSet::full(g.n);
    s.remove(u);
    return induced_subgraph(g, s);
}

uint64_t component_of(const Graph& g, int u, uint64_t within) {
    uint64_t comp = (1ULL << u) & within;
    uint64_t frontier = comp;
    while (frontier) {
        uint64_t next = 0;
        uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.adj[v] & within & ~comp;
        }
        comp |= next;
        frontier = next;
    }
    return comp;
}

std::vector<uint64_t> components(const Graph& g, uint64_t within) {
    std::vector<uint64_t> out;
    uint64_t left = within & g.vertex_mask();
    while (left) {
        int u = std::countr_zero(left);
        uint64_t c = component_of(g, u, left);
        out.push_back(c);
        left &= ~c;
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    return component_of(g, 0, g.vertex_mask()) == g.vertex_mask();
}

Graph complement_graph(const Graph& g) {
    Graph h = g;
    for (int u = 0; u < g.n; u++) h.adj[u] = ~g.adj[u] & g.vertex_mask() & ~(1ULL << u);
    return h;
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "bgraph " << g.n << "\n";
    out << "colours ";
    if (!g.coloured()) {
        out << "-";
    } else if (g.n == 0) {
        out << "."; // coloured but empty
    } else {
        for (int u = 0; u < g.n; u++) out << (g.is_black(u) ? 'b' : 'w');
    }
    out << "\n";
    for (auto [u, v] : g.edge_list()) out << "e " << u << " " << v << "\n";
    out << "end\n";
    return out.str();
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int u = 0; u < g.n; u++) {
        out << "  " << u;
        if (g.is_black(u))
            out << " [style=filled, fillcolor=black, fontcolor=white]";
        out << ";\n";
    }
    for (auto [u, v] : g.edge_list()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::vector<Graph> parse_graphs(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    Graph cur;
    bool open = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue; // blank
        if (tok == "bgraph") {
            int n;
            if (open || !(ls >> n) || n < 0 || n > kMaxVertices)
                fail(ErrorKind::Format, "bad bgraph header at line " + std::to_string(lineno));
            cur = Graph(n);
            open = true;
        } else if (tok == "colours") {
            std::string cs;
            if (!open || !(ls >> cs)) fail(ErrorKind::Format, "bad colours line " + std::to_string(lineno));
            if (cs == "-") {
                cur.blacks.reset();
            } else if (cs == "." && cur.n == 0) {
                cur.blacks = 0;
            } else {
                if (static_cast<int>(cs.size()) != cur.n)
                    fail(ErrorKind::Format, "colour string length mismatch at line " + std::to_string(lineno));
                cur.blacks = 0;
                for (int u = 0; u < cur.n; u++) {
                    if (cs[u] == 'b')
                        cur.set_colour(u, Colour::Black);
                    else if (cs[u] == 'w')
                        cur.set_colour(u, Colour::White);
                    else
                        fail(ErrorKind::Format, "colour char must be b/w at line " + std::to_string(lineno));
                }
            }
        } else if (tok == "e") {
            int u, v;
            if (!open || !(ls >> u >> v)) fail(ErrorKind::Format, "bad edge line " + std::to_string(lineno));
            cur.add_edge(u, v);
        } else if (tok == "end") {
            if (!open) fail(ErrorKind::Format, "end without bgraph at line " + std::to_string(lineno));
            out.push_back(cur);
            open = false;
        } else if (tok[0] == '#') {
            continue;
        } else {
            fail(ErrorKind::Format, "unknown token '" + tok + "' at line " + std::to_string(lineno));
        }
    }
    if (open) fail(ErrorKind::Format, "unterminated bgraph block");
    return out;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    auto gs = parse_graphs(in);
    if (gs.size() != 1) fail(ErrorKind::Format, "expected exactly one graph block");
    return gs[0];
}

LabeledKey labeled_key(const Graph& g) {
    if (g.n > 22) fail(ErrorKind::OutOfRange, "labeled key supports n <= 22");
    LabeledKey k;
    int bit = 0;
    auto push = [&](bool b) {
        if (b) k.w[bit >> 6] |= 1ULL << (bit & 63);
        bit++;
    };
    for (int u = 0; u < g.n; u++)
        for (int v = u + 1; v < g.n; v++) push(g.edge(u, v));
    push(g.coloured());
    if (g.coloured())
        for (int u = 0; u < g.n; u++) push(g.is_black(u));
    return k;
}

std::string key_to_hex(const CanonKey& key) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(key.size() * 2);
    for (unsigned char c : key) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

} // namespace purelab
