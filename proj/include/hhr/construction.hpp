#pragma once

#include "hhr/graph2.hpp"
#include "hhr/hedgehog.hpp"

#include <cstdint>
#include <vector>

namespace hhr {

// Binomial random graph: each pair independently with probability p, one
// splitmix64 draw per pair in colex pair order.
Graph2 sample_gnp(int n, double p, std::uint64_t seed);

struct Lemma3Params {
    int n_vertices = 0;
    double p = 0.0;
    int deg_bound = 0;
    int clique_q = 0;
    int indep_s = 0;
};

// N = floor(n^{3/2} / (10^6 ln n)), p = min(1, 800 ln(n)/sqrt(n)),
// deg_bound = floor(3n/2000), clique_q = 10, indep_s = floor(sqrt(n)/50).
// Natural logarithm. Throws when N < 2.
Lemma3Params paper_lemma3_params(long long n);

struct Lemma3Report {
    bool deg_ok = false;
    bool clique_ok = false;
    bool indep_ok = false;
    int max_degree = 0;
    std::vector<int> clique_witness; // K_q found (clique_ok false)
    std::vector<int> indep_witness;  // independent set found (indep_ok false)
    bool all() const { return deg_ok && clique_ok && indep_ok; }
};

// Exact check of the three random-graph properties: max degree <= deg_bound,
// no K_{clique_q}, no independent set of size indep_s.
Lemma3Report check_lemma3(const Graph2& g, const Lemma3Params& params);

struct WitnessReport {
    bool certified = false;
    bool alpha_ok = false;        // no independent set of size b
    bool clique_ok = false;       // no K_k
    bool multiplicity_ok = false; // m + 1 > 2 * max_degree
    int alpha_value = 0;          // exact independence number
    int max_degree = 0;
    std::vector<int> clique_found; // K_k witness when clique_ok fails
};

// Certifies that the colouring derived from gamma contains no monochromatic
// copy of the heavy-core hedgehog H*(p):
//   blue:  a blue copy puts a size-b independent set into gamma, so
//          alpha(gamma) < b blocks it;
//   red:   a heavy pair needs m+1 red completions, but a non-edge of gamma
//          lies in at most 2*max_degree red triples, so m+1 > 2*max_degree
//          forces the heavy-core image to be a K_k of gamma.
// k > b is tolerated (the certificate is then vacuous but still sound).
WitnessReport verify_lower_bound_witness(const Graph2& gamma, const HStarParams& p);

} // namespace hhr
