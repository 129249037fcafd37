#pragma once

#include <set>
#include <string>
#include <vector>

#include "purelab/graph.hpp"
#include "purelab/euler.hpp"

namespace purelab {

// Connection set for Cay(Z_n, S); S = -S, 0 not in S.
struct CirculantSpec {
    int modulus;
    std::set<int> connection; // stored with both signs reduced mod n
};

Graph gen_cycle(int n);
Graph gen_path(int n);
Graph gen_complete(int n);
Graph gen_circulant(const CirculantSpec& spec);
Graph gen_paley(int p);
Graph gen_pentagon_bouquet(int m); // m pentagons identified at vertex 0
Graph gen_fdf_chain(int m);        // m pentagon pairs, cut vertices 0..m-1 joined in a path
Graph gen_petersen();
// K5 with the transition system of the cycles (0,1,2,3,4) and (0,2,4,1,3).
std::pair<Multigraph, TransitionSystem> gen_k5_two_pentagons_ts();

std::set<int> quadratic_residues(int p);
bool is_prime(int n);

bool strongly_regular_mod(const Graph& g, int s, int v, int k, int lambda, int mu);

} // namespace purelab
