#include "hhr/construction.hpp"

#include "hhr/clique.hpp"
#include "hhr/combinadic.hpp"
#include "hhr/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace hhr {

Graph2 sample_gnp(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_gnp: p outside [0,1]");
    Graph2 g(n);
    SplitMix64 gen(seed);
    const std::uint64_t pairs = n_pairs(static_cast<std::uint64_t>(n));
    for (std::uint64_t r = 0; r < pairs; ++r) {
        const bool take = gen.chance(p);
        if (take) {
            const auto [u, v] = pair_unrank(r);
            g.add_edge(u, v);
        }
    }
    return g;
}

Lemma3Params paper_lemma3_params(long long n) {
    if (n < 3) throw std::invalid_argument("paper_lemma3_params: n too small");
    const long double nl = static_cast<long double>(n);
    const long double log_n = std::log(nl);
    const long double big_n = nl * std::sqrt(nl) / (1e6L * log_n);
    Lemma3Params params;
    params.n_vertices = static_cast<int>(big_n);
    if (params.n_vertices < 2)
        throw std::invalid_argument("paper_lemma3_params: derived host size below 2");
    params.p = static_cast<double>(std::min(1.0L, 800.0L * log_n / std::sqrt(nl)));
    params.deg_bound = static_cast<int>(3 * n / 2000);
    params.clique_q = 10;
    long long root = static_cast<long long>(std::sqrt(nl));
    while ((root + 1) * (root + 1) <= n) ++root;
    while (root * root > n) --root;
    params.indep_s = static_cast<int>(root / 50);
    return params;
}

Lemma3Report check_lemma3(const Graph2& g, const Lemma3Params& params) {
    if (g.n() != params.n_vertices)
        throw std::invalid_argument("check_lemma3: graph size does not match params");
    Lemma3Report rep;
    rep.max_degree = g.max_degree();
    rep.deg_ok = rep.max_degree <= params.deg_bound;
    if (auto k = has_clique(g, params.clique_q))
        rep.clique_witness = std::move(*k);
    rep.clique_ok = rep.clique_witness.empty();
    if (auto s = has_independent_set(g, params.indep_s))
        rep.indep_witness = std::move(*s);
    rep.indep_ok = rep.indep_witness.empty();
    return rep;
}

WitnessReport verify_lower_bound_witness(const Graph2& gamma, const HStarParams& p) {
    if (gamma.n() < 1) throw std::invalid_argument("verify_lower_bound_witness: empty graph");
    if (p.b < 2 || p.k < 1 || p.m < 0)
        throw std::invalid_argument("verify_lower_bound_witness: invalid parameters");
    WitnessReport rep;
    rep.alpha_value = independence_number(gamma);
    rep.max_degree = gamma.max_degree();
    rep.alpha_ok = rep.alpha_value < p.b;
    if (auto k = has_clique(gamma, static_cast<int>(p.k)))
        rep.clique_found = std::move(*k);
    rep.clique_ok = rep.clique_found.empty();
    rep.multiplicity_ok = p.m + 1 > 2ll * rep.max_degree;
    rep.certified = rep.alpha_ok && rep.clique_ok && rep.multiplicity_ok;
    return rep;
}

} // namespace hhr
