// purelab: local complementation laboratory.
//
// Exit codes: 0 success, 1 negative mathematical answer, 2 usage or format
// error, 3 budget exhaustion.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "purelab/euler.hpp"
#include "purelab/families.hpp"
#include "purelab/graph.hpp"
#include "purelab/orbit.hpp"
#include "purelab/parity.hpp"
#include "purelab/split.hpp"
#include "purelab/word.hpp"

using namespace purelab;

namespace {

struct Options {
    std::string format = "text";
    size_t budget = 5'000'000;
    int jobs = 1;
    uint64_t seed = 1; // reserved for randomized search strategies
    std::vector<std::string> gen;
    std::string in_file;
};

Budget budget_of(const Options& o) { return Budget{o.budget}; }

int parse_int(const std::string& s) {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw CLI::ValidationError("expected an integer: " + s);
    return v;
}

std::set<int> parse_connection(const std::string& s) {
    std::set<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.insert(parse_int(item));
    return out;
}

// generator kinds producing plain graphs
std::optional<Graph> gen_graph_kind(const std::vector<std::string>& args) {
    const std::string& kind = args[0];
    auto want = [&](size_t k) {
        if (args.size() != k + 1)
            fail(ErrorKind::InvalidParams, kind + " expects " + std::to_string(k) + " parameter(s)");
    };
    if (kind == "cycle") {
        want(1);
        return gen_cycle(parse_int(args[1]));
    }
    if (kind == "path") {
        want(1);
        return gen_path(parse_int(args[1]));
    }
    if (kind == "complete") {
        want(1);
        return gen_complete(parse_int(args[1]));
    }
    if (kind == "circulant") {
        want(2);
        return gen_circulant({parse_int(args[1]), parse_connection(args[2])});
    }
    if (kind == "paley") {
        want(1);
        return gen_paley(parse_int(args[1]));
    }
    if (kind == "pentagon_bouquet") {
        want(1);
        return gen_pentagon_bouquet(parse_int(args[1]));
    }
    if (kind == "fdf_chain") {
        want(1);
        return gen_fdf_chain(parse_int(args[1]));
    }
    if (kind == "petersen") {
        want(0);
        return gen_petersen();
    }
    return std::nullopt;
}

Graph load_graph(const Options& o) {
    if (!o.gen.empty()) {
        auto g = gen_graph_kind(o.gen);
        if (!g) fail(ErrorKind::InvalidParams, "unknown graph generator: " + o.gen[0]);
        return *g;
    }
    if (o.in_file.empty()) fail(ErrorKind::InvalidParams, "need --gen or --in");
    if (o.in_file == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return parse_graph(buf.str());
    }
    std::ifstream f(o.in_file);
    if (!f) fail(ErrorKind::Format, "cannot open " + o.in_file);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_graph(buf.str());
}

std::pair<Multigraph, TransitionSystem> load_mgraph(const Options& o) {
    if (!o.gen.empty()) {
        if (o.gen[0] == "k5_two_pentagons_ts") return gen_k5_two_pentagons_ts();
        fail(ErrorKind::InvalidParams, "unknown transition-system generator: " + o.gen[0]);
    }
    if (o.in_file.empty()) fail(ErrorKind::InvalidParams, "need --gen or --in");
    std::stringstream buf;
    if (o.in_file == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(o.in_file);
        if (!f) fail(ErrorKind::Format, "cannot open " + o.in_file);
        buf << f.rdbuf();
    }
    return parse_mgraph(buf.str());
}

void emit_graph(const Graph& g, const Options& o) {
    std::cout << (o.format == "dot" ? to_dot(g) : format_graph(g));
}

std::vector<std::string> dow_tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

Dow dow_from_tokens(const std::vector<std::string>& toks, std::vector<std::string>& names) {
    std::map<std::string, int> id;
    std::vector<int> letters;
    for (const std::string& t : toks) {
        auto it = id.find(t);
        if (it == id.end()) {
            it = id.emplace(t, static_cast<int>(names.size())).first;
            names.push_back(t);
        }
        letters.push_back(it->second);
    }
    return make_dow(letters);
}

int exit_code_of(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::BudgetExceeded:
            return 3;
        default:
            return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"purelab: local complementation, parity classes and transition systems"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format: text or dot")
        ->check(CLI::IsMember({"text", "dot"}));
    app.add_option("--budget", opt.budget, "state budget for enumerations");
    app.add_option("--jobs", opt.jobs, "worker threads for enumeration verbs");
    app.add_option("--seed", opt.seed, "seed for randomized search strategies");

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--gen", opt.gen, "generator kind and parameters")->expected(-1);
        cmd->add_option("--in", opt.in_file, "input file ('-' for stdin)");
    };

    auto* cmd_gen = app.add_subcommand("gen", "emit a named graph or transition system");
    std::vector<std::string> gen_args;
    cmd_gen->add_option("kind", gen_args, "generator kind and parameters")->required()->expected(-1);

    auto* cmd_class = app.add_subcommand("class", "enumerate a parity class");
    add_input(cmd_class);

    auto* cmd_orbit = app.add_subcommand("orbit", "enumerate a complementation class");
    add_input(cmd_orbit);
    bool orbit_labeled = false, orbit_diameter = false;
    cmd_orbit->add_flag("--labeled", orbit_labeled, "track labeled members");
    cmd_orbit->add_flag("--diameter", orbit_diameter, "report the complementation-graph diameter");

    auto* cmd_pure = app.add_subcommand("pure", "decide purity");
    add_input(cmd_pure);
    bool by_split = false;
    cmd_pure->add_flag("--by-split", by_split, "prove purity by essential decomposition");

    auto* cmd_invert = app.add_subcommand("invert", "invert a graph");
    add_input(cmd_invert);

    auto* cmd_ts = app.add_subcommand("ts", "transition system pipelines");
    cmd_ts->require_subcommand(1);
    auto* ts_orth = cmd_ts->add_subcommand("tour-orth", "orthogonal Euler tour");
    add_input(ts_orth);
    auto* ts_ocd = cmd_ts->add_subcommand("ocd", "orthogonal cycle decomposition");
    add_input(ts_ocd);
    std::string ocd_route = "auto";
    ts_ocd->add_option("--route", ocd_route, "auto, parity or backtracking")
        ->check(CLI::IsMember({"auto", "parity", "backtracking"}));
    auto* ts_parity = cmd_ts->add_subcommand("to-parity", "bicoloured graph of a transition system");
    add_input(ts_parity);
    auto* ts_cdc = cmd_ts->add_subcommand("cdc", "cycle double cover of a cubic graph");
    add_input(ts_cdc);
    std::string cdc_route_name = "auto";
    ts_cdc->add_option("--route", cdc_route_name, "auto, one-factor or line-graph")
        ->check(CLI::IsMember({"auto", "one-factor", "line-graph"}));

    auto* cmd_dow = app.add_subcommand("dow", "double occurrence words");
    cmd_dow->require_subcommand(1);
    auto* dow_alt = cmd_dow->add_subcommand("alternance", "alternance graph of a word");
    std::vector<std::string> dow_word;
    dow_alt->add_option("word", dow_word, "letters")->required()->expected(-1);
    auto* dow_tw = cmd_dow->add_subcommand("twist", "twist at a letter");
    std::string twist_letter;
    dow_tw->add_option("letter", twist_letter, "letter")->required();
    std::vector<std::string> dow_word2;
    dow_tw->add_option("word", dow_word2, "letters")->required()->expected(-1);
    auto* dow_real = cmd_dow->add_subcommand("realize", "find a word with a given alternance graph");
    add_input(dow_real);

    CLI11_PARSE(app, argc, argv);

    try {
        opt.gen.empty() && !gen_args.empty() ? void(opt.gen = gen_args) : void();
        Budget budget = budget_of(opt);

        if (cmd_gen->parsed()) {
            if (gen_args[0] == "k5_two_pentagons_ts") {
                auto [m, s] = gen_k5_two_pentagons_ts();
                std::cout << format_mgraph(m, s);
            } else {
                auto g = gen_graph_kind(gen_args);
                if (!g) fail(ErrorKind::InvalidParams, "unknown generator: " + gen_args[0]);
                emit_graph(*g, opt);
            }
            return 0;
        }

        if (cmd_class->parsed()) {
            Graph g = load_graph(opt);
            if (!g.coloured()) g = natural_colouring(g);
            ParityClass cls = enumerate_parity_class(g, budget, opt.jobs);
            PurityReport purity = is_pure(g, budget, opt.jobs);
            std::cout << "pclass seed=" << key_to_hex(canonical_form(g))
                      << " count=" << cls.entries.size() << " pure=" << (purity.pure ? "yes" : "no")
                      << "\n";
            if (!purity.pure) {
                std::cout << "anticlique";
                for (int v : purity.anticlique.to_vector()) std::cout << " " << v;
                std::cout << "\nword";
                for (int u : purity.witness_word) std::cout << " " << u;
                std::cout << "\n";
                emit_graph(parity_apply(g, purity.witness_word), opt);
            }
            for (int idx : cls.sorted_by_key) emit_graph(cls.entries[idx].rep, opt);
            return 0;
        }

        if (cmd_orbit->parsed()) {
            Graph g = load_graph(opt);
            if (orbit_diameter) {
                int d = complementation_diameter(g, budget);
                std::cout << "diameter " << d << "\n";
                return 0;
            }
            Orbit orbit = enumerate_complementation_class(g, orbit_labeled, budget, opt.jobs);
            std::cout << "orbit " << orbit.reps.size() << " "
                      << (orbit.labeled ? std::to_string(orbit.labeled->size()) : "-") << "\n";
            for (auto& [key, rep] : orbit.reps) emit_graph(rep, opt);
            return 0;
        }

        if (cmd_pure->parsed()) {
            Graph g = load_graph(opt);
            if (!g.coloured()) g = natural_colouring(g);
            if (by_split) {
                auto cert = purity_by_decomposition(g, budget);
                if (cert) {
                    std::cout << "pure=yes\n" << format_cert(*cert) << "\n";
                    return 0;
                }
                std::cout << "pure=unknown\n";
                return 1;
            }
            PurityReport purity = is_pure(g, budget, opt.jobs);
            std::cout << "pure=" << (purity.pure ? "yes" : "no") << " count=" << purity.class_size
                      << "\n";
            if (!purity.pure) {
                std::cout << "anticlique";
                for (int v : purity.anticlique.to_vector()) std::cout << " " << v;
                std::cout << "\nword";
                for (int u : purity.witness_word) std::cout << " " << u;
                std::cout << "\n";
                return 1;
            }
            return 0;
        }

        if (cmd_invert->parsed()) {
            Graph g = load_graph(opt);
            if (!g.coloured()) g = natural_colouring(g);
            if (!is_invertible(g)) {
                std::cout << "not invertible\n";
                return 1;
            }
            emit_graph(invert(g), opt);
            return 0;
        }

        if (ts_orth->parsed()) {
            auto [m, s] = load_mgraph(opt);
            KotzigResult r = orthogonal_euler_tour(m, s);
            std::cout << "tour";
            for (int d : r.tour) std::cout << " " << m.dart_edge(d);
            std::cout << "\nrepairs " << r.faulty_history.size() - 1 << "\n";
            return 0;
        }

        if (ts_ocd->parsed()) {
            auto [m, s] = load_mgraph(opt);
            OcdRoute route = ocd_route == "parity"         ? OcdRoute::Parity
                             : ocd_route == "backtracking" ? OcdRoute::Backtracking
                                                           : OcdRoute::Auto;
            auto cycles = orthogonal_cycle_decomposition(m, s, route, budget);
            if (!cycles) {
                std::cout << "none\n";
                return 1;
            }
            for (const auto& cyc : *cycles) {
                std::cout << "cycle";
                for (int e : cyc) std::cout << " " << e;
                std::cout << "\n";
            }
            return 0;
        }

        if (ts_parity->parsed()) {
            auto [m, s] = load_mgraph(opt);
            emit_graph(ts_to_bicoloured(m, s, budget), opt);
            return 0;
        }

        if (ts_cdc->parsed()) {
            Graph g = load_graph(opt);
            CdcResult r = cdc_route_name == "one-factor"   ? cdc_route(g, CdcRoute::OneFactor, budget)
                          : cdc_route_name == "line-graph" ? cdc_route(g, CdcRoute::LineGraph, budget)
                                                           : cdc_search(g, budget);
            if (!r.cycles) {
                std::cout << (r.pure_obstruction ? "none (pure obstruction)\n" : "none\n");
                return 1;
            }
            auto edges = g.edge_list();
            for (size_t e = 0; e < edges.size(); e++)
                std::cout << "# edge " << e << " = " << edges[e].first << " " << edges[e].second
                          << "\n";
            for (const auto& cyc : *r.cycles) {
                std::cout << "cycle";
                for (int e : cyc) std::cout << " " << e;
                std::cout << "\n";
            }
            return 0;
        }

        if (dow_alt->parsed()) {
            std::vector<std::string> names;
            Dow w = dow_from_tokens(dow_word, names);
            for (size_t i = 0; i < names.size(); i++)
                std::cout << "# letter " << i << " = " << names[i] << "\n";
            emit_graph(alternance_graph(w), opt);
            return 0;
        }

        if (dow_tw->parsed()) {
            std::vector<std::string> names;
            Dow w = dow_from_tokens(dow_word2, names);
            int letter = -1;
            for (size_t i = 0; i < names.size(); i++)
                if (names[i] == twist_letter) letter = static_cast<int>(i);
            if (letter < 0) fail(ErrorKind::InvalidParams, "letter not in word");
            Dow out = twist(w, letter);
            for (size_t i = 0; i < out.letters.size(); i++)
                std::cout << (i ? " " : "") << names[out.letters[i]];
            std::cout << "\n";
            return 0;
        }

        if (dow_real->parsed()) {
            Graph g = load_graph(opt);
            auto w = realize_dow(g);
            if (!w) {
                std::cout << "none\n";
                return 1;
            }
            for (size_t i = 0; i < w->letters.size(); i++)
                std::cout << (i ? " " : "") << w->letters[i];
            std::cout << "\n";
            return 0;
        }

        fail(ErrorKind::InvalidParams, "no verb");
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_of(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
