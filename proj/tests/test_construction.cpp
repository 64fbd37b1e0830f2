#include "hhr/clique.hpp"
#include "hhr/construction.hpp"
#include "hhr/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace hhr;

namespace {

Graph2 complete(int n) {
    Graph2 g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph2 cycle5() {
    Graph2 g(5);
    for (int v = 0; v < 5; ++v) g.add_edge(std::min(v, (v + 1) % 5), std::max(v, (v + 1) % 5));
    return g;
}

} // namespace

TEST_CASE("sample_gnp endpoints and determinism") {
    CHECK(sample_gnp(20, 0.0, 3).m() == 0);
    CHECK(sample_gnp(20, 1.0, 3).m() == 190);
    const auto a = sample_gnp(50, 0.3, 1);
    const auto b = sample_gnp(50, 0.3, 1);
    CHECK(a == b);
    CHECK_FALSE(a == sample_gnp(50, 0.3, 2));
    CHECK_THROWS_AS(sample_gnp(5, 1.5, 0), std::invalid_argument);
}

TEST_CASE("sample_gnp edge count sits at the binomial mean") {
    // 200 seeds at N=60, p=0.3: mean within 3 standard deviations of the mean
    const double expected = 0.3 * 1770.0;
    const double sd_of_mean = std::sqrt(1770.0 * 0.3 * 0.7 / 200.0);
    double total = 0;
    for (std::uint64_t t = 0; t < 200; ++t)
        total += static_cast<double>(sample_gnp(60, 0.3, derive_seed(2024, t)).m());
    const double mean = total / 200.0;
    CHECK(std::abs(mean - expected) <= 3.0 * sd_of_mean);
}

TEST_CASE("paper_lemma3_params pinned values") {
    const auto p = paper_lemma3_params(1000000);
    CHECK(p.n_vertices == 72);
    CHECK(p.deg_bound == 1500);
    CHECK(p.indep_s == 20);
    CHECK(p.clique_q == 10);
    CHECK(p.p == 1.0); // 800 ln(n)/sqrt(n) > 1 here, capped

    CHECK(paper_lemma3_params(100000000).clique_q == 10); // k is 10 for every n
    CHECK_THROWS_AS(paper_lemma3_params(3), std::invalid_argument); // N < 2
}

TEST_CASE("check_lemma3 pinned examples") {
    const Lemma3Params loose{4, 0.0, 5, 10, 4};
    const auto empty_rep = check_lemma3(Graph2(4), loose);
    CHECK(empty_rep.deg_ok);
    CHECK(empty_rep.clique_ok);
    CHECK_FALSE(empty_rep.indep_ok); // the whole vertex set is independent

    const auto k12 = complete(12);
    const Lemma3Params q10{12, 0.0, 20, 10, 2};
    const auto k12_rep = check_lemma3(k12, q10);
    CHECK_FALSE(k12_rep.clique_ok);
    CHECK(k12_rep.clique_witness.size() == 10);

    const Lemma3Params c5p{5, 0.0, 2, 3, 3};
    CHECK(check_lemma3(cycle5(), c5p).all());

    CHECK_THROWS_AS(check_lemma3(Graph2(3), c5p), std::invalid_argument); // size mismatch
}

TEST_CASE("check_lemma3 agrees with brute-force clique and independence") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 6 + static_cast<int>(seed % 5); // up to 10
        const auto g = sample_gnp(n, 0.5, derive_seed(71, seed));
        const int q = 3 + static_cast<int>(seed % 3);
        const int s = 3 + static_cast<int>((seed / 3) % 3);
        const Lemma3Params params{n, 0.5, n / 2, q, s};
        const auto rep = check_lemma3(g, params);
        // independent routes for every component
        int maxdeg = 0;
        for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
        CHECK(rep.deg_ok == (maxdeg <= params.deg_bound));
        CHECK(rep.clique_ok == (static_cast<int>(max_clique(g).size()) < q));
        CHECK(rep.indep_ok == (independence_number(g) < s));
    }
}

TEST_CASE("witness certifier pinned examples") {
    HStarParams good{3, 3, 5, 21};
    const auto certified = verify_lower_bound_witness(cycle5(), good);
    CHECK(certified.certified);
    CHECK(certified.alpha_value == 2);
    CHECK(certified.max_degree == 2);

    HStarParams small_body{2, 3, 5, 12};
    const auto r1 = verify_lower_bound_witness(cycle5(), small_body);
    CHECK_FALSE(r1.certified);
    CHECK_FALSE(r1.alpha_ok); // alpha(C_5) = 2 >= b
    CHECK(r1.clique_ok);
    CHECK(r1.multiplicity_ok);

    HStarParams vs_k3{2, 3, 9, 20};
    const auto r2 = verify_lower_bound_witness(complete(3), vs_k3);
    CHECK_FALSE(r2.certified);
    CHECK_FALSE(r2.clique_ok);
    CHECK(r2.clique_found.size() == 3);

    CHECK_THROWS_AS(verify_lower_bound_witness(Graph2(0), good), std::invalid_argument);
    CHECK_THROWS_AS(verify_lower_bound_witness(cycle5(), HStarParams{1, 1, 0, 5}),
                    std::invalid_argument);
}
