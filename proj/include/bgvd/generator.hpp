#pragma once
#include <cstdint>
#include <string>

#include "bgvd/instance_io.hpp"

namespace bgvd {

// Deterministic instance generators: equal parameters and seed give
// byte-identical instances on every platform (raw mt19937_64 draws only, no
// library distributions).

// G(n,p) with 1-indexed vertices.
Instance gen_random_gnp(int n, double p, uint64_t seed);

// A random connected block graph (a tree of cliques joined by bridges) on
// n-k vertices plus k noise vertices with random attachments, so deleting
// the noise always works: OPT <= k. Labels shuffled.
Instance gen_planted_bgvd(int n, int k, uint64_t seed);

// `petals` induced 4-cycles pairwise sharing exactly the hub, which is
// always vertex 1; the other labels are shuffled.
Instance gen_flower(int petals, uint64_t seed);

// t vertex-disjoint induced 4-cycles, labels shuffled; OPT = t.
Instance gen_disjoint_c4(int t, uint64_t seed);

// Random weighted multigraph: up to maxm edges drawn with replacement from
// the non-loop pairs (repeats become multiplicity), integer weights 1..9.
Instance gen_random_wfvs(int n, int maxm, int k, uint64_t seed);

// G(n,p) thinned until it has no diamond and no induced 4-cycle (a random
// vertex of each small obstruction is deleted), as the clique-incidence
// construction requires.
MultiGraph gen_c4d4_free(int n, double p, uint64_t seed);

// Instances on which one specific kernel rule is known to fire during
// kernelization; rule is one of component/pendant/twins/chain/forced/fan.
// All families stay within the brute-force oracle's size range. The fan
// family needs 14-15 vertices (two hubs plus a 12-to-13-wide spoke fan); the
// others fit in 12.
Instance gen_rule_instance(const std::string& rule, int k, uint64_t seed);

// Theta graph for the feedback solver: `poles` (2 or 3) mutually
// non-adjacent hub vertices, m degree-2 connectors each joining a random
// pole pair, `noise` pendant vertices, weights 1..9. Anchoring the poles
// yields m disjoint links over `poles` anchor components, so whenever
// m > k + poles the budget measure goes negative and the solver must
// refute the subproblem outright; these are the natural stress instances
// for that pruning rule.
Instance gen_theta_wfvs(int poles, int m, int noise, uint64_t seed);

}  // namespace bgvd
