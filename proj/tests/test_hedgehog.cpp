#include "hhr/combinadic.hpp"
#include "hhr/degeneracy.hpp"
#include "hhr/hedgehog.hpp"
#include "hhr/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

using namespace hhr;

namespace {

std::map<std::pair<int, int>, int> spikes_per_pair(const Hedgehog& h) {
    std::map<std::pair<int, int>, int> out;
    for (const auto& s : h.spikes()) ++out[{s.u, s.v}];
    return out;
}

} // namespace

TEST_CASE("standard hedgehog shapes") {
    const auto h2 = standard_hedgehog(2);
    CHECK(h2.n_total() == 3);
    CHECK(h2.spike_count() == 1);

    const auto h4 = standard_hedgehog(4);
    CHECK(h4.n_total() == 10);
    CHECK(h4.spike_count() == 6);

    // colex pair order fixes which spike serves which pair
    const auto h3 = standard_hedgehog(3);
    CHECK(h3.spikes()[0] == Spike{3, 0, 1});
    CHECK(h3.spikes()[1] == Spike{4, 0, 2});
    CHECK(h3.spikes()[2] == Spike{5, 1, 2});

    CHECK_THROWS_AS(standard_hedgehog(1), std::invalid_argument);
}

TEST_CASE("hedgehog invariants are enforced") {
    CHECK_THROWS_AS(Hedgehog({0, 1, 1}, {}, 3), std::invalid_argument);      // dup body
    CHECK_THROWS_AS(Hedgehog({0, 1}, {{1, 0, 1}}, 3), std::invalid_argument); // spike in body
    CHECK_THROWS_AS(Hedgehog({0, 1}, {{2, 0, 2}}, 3), std::invalid_argument); // pair not in body
    CHECK_THROWS_AS(Hedgehog({0, 1}, {{2, 0, 1}, {2, 0, 1}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(Hedgehog({0, 1}, {{2, 0, 1}}, 2), std::invalid_argument); // n_total short
    // sparse ids allowed when there is no padding
    const Hedgehog sparse({4, 7}, {{9, 4, 7}}, 3);
    CHECK(sparse.padding_vertices().empty());
    // padding demands contiguous ids
    CHECK_THROWS_AS(Hedgehog({4, 7}, {{9, 4, 7}}, 5), std::invalid_argument);
}

TEST_CASE("build_hstar pinned example b=3 k=2 m=2 n=10") {
    const auto h = build_hstar({3, 2, 2, 10});
    CHECK(h.n_total() == 10);
    CHECK(h.spike_count() == 7);
    // pair {0,1} carries base + heavy = 3 spikes before padding starts at id 8
    int pre_padding_01 = 0;
    for (const auto& s : h.spikes())
        if (s.u == 0 && s.v == 1 && s.vertex < 8) ++pre_padding_01;
    CHECK(pre_padding_01 == 3);
    const auto per_pair = spikes_per_pair(h);
    CHECK(per_pair.at({0, 1}) == 4); // one padding spike lands here as well
    CHECK(per_pair.at({0, 2}) == 2);
    CHECK(per_pair.at({1, 2}) == 1);
}

TEST_CASE("build_hstar at the paper scale n=10^6") {
    const HStarParams p{20, 10, 10000, 1000000};
    CHECK(p.pre_padding_vertices() == 450210);
    CHECK(p.pre_padding_vertices() <= p.n_total / 2);
    const auto h = build_hstar(p);
    CHECK(h.n_total() == 1000000);
    CHECK(h.spike_count() == 1000000 - 20);
    const auto per_pair = spikes_per_pair(h);
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) CHECK(per_pair.at({u, v}) >= 10001); // m + 1
    for (int u = 0; u < 20; ++u)
        for (int v = u + 1; v < 20; ++v) CHECK(per_pair.at({u, v}) >= 1);
}

TEST_CASE("build_hstar degenerate corner: single pair, no heavy core") {
    const auto h = build_hstar({2, 1, 0, 3});
    CHECK(h.n_total() == 3);
    CHECK(h.spike_count() == 1);
    CHECK(h.spikes()[0] == Spike{2, 0, 1});
}

TEST_CASE("build_hstar rejects budget violations") {
    CHECK_THROWS_AS(build_hstar({3, 2, 2, 7}), std::invalid_argument);  // needs 8
    CHECK_THROWS_AS(build_hstar({3, 4, 0, 10}), std::invalid_argument); // k > b
    CHECK_THROWS_AS(build_hstar({1, 1, 0, 9}), std::invalid_argument);  // b < 2
}

TEST_CASE("paper_hstar_params") {
    const auto p = paper_hstar_params(1000000);
    CHECK(p.b == 20);
    CHECK(p.k == 10);
    CHECK(p.m == 10000);
    CHECK(p.n_total == 1000000);

    const auto q = paper_hstar_params(250000);
    CHECK(q.b == 10);
    CHECK(q.k == 10);
    CHECK(q.m == 2500);
    CHECK(q.n_total == 250000);

    CHECK_THROWS_AS(paper_hstar_params(100), std::invalid_argument); // b < k
}

TEST_CASE("validate_hedgehog pinned examples") {
    const Hypergraph3 a(4, {{0, 1, 2}, {0, 1, 3}});
    const auto va = validate_hedgehog(a, {0, 1});
    REQUIRE(va.valid);
    CHECK(va.hedgehog->spikes() == std::vector<Spike>{{2, 0, 1}, {3, 0, 1}});
    CHECK(va.hedgehog->n_total() == 4);

    const Hypergraph3 b(5, {{0, 1, 2}, {2, 3, 4}});
    const auto vb = validate_hedgehog(b, {0, 2, 3});
    REQUIRE(vb.valid);
    CHECK(vb.hedgehog->spikes() == std::vector<Spike>{{1, 0, 2}, {4, 2, 3}});

    // vertex 2 now reads as a spike of {0,1,2} but has degree two, and edge
    // {2,3,4} keeps only one body vertex; either reason may surface first
    const auto vc = validate_hedgehog(b, {0, 1, 3});
    CHECK_FALSE(vc.valid);
    CHECK_FALSE(vc.reason.empty());

    // spike of degree two
    const Hypergraph3 d(4, {{0, 1, 3}, {0, 2, 3}});
    const auto vd = validate_hedgehog(d, {0, 1, 2});
    CHECK_FALSE(vd.valid);
    CHECK(vd.reason.find("degree") != std::string::npos);
}

TEST_CASE("spike_pair_graph collapses multiplicities") {
    CHECK(spike_pair_graph(standard_hedgehog(4)).m() == 6); // K_4
    const auto f = spike_pair_graph(build_hstar({3, 2, 2, 10}));
    CHECK(f.n() == 3);
    CHECK(f.m() == 3); // K_3
    CHECK(spike_pair_graph(standard_hedgehog(2)).m() == 1); // K_2
}

TEST_CASE("to_hypergraph round-trips through validate_hedgehog") {
    const auto h3 = standard_hedgehog(3);
    const auto back = to_hypergraph(h3);
    CHECK(back.n() == 6);
    CHECK(back.m() == 3);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n_total = 3 + static_cast<int>(derive_seed(21, seed) % 38);
        const auto x = random_hedgehog(n_total, derive_seed(22, seed));
        const auto v = validate_hedgehog(to_hypergraph(x), x.body());
        REQUIRE(v.valid);
        CHECK(*v.hedgehog == x);
    }
}

TEST_CASE("hedgehogs are 1-degenerate") {
    CHECK(degeneracy3(to_hypergraph(standard_hedgehog(5))).value == 1);
    CHECK(degeneracy3(to_hypergraph(build_hstar({4, 3, 2, 30}))).value == 1);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto x = random_hedgehog(12, derive_seed(23, seed));
        CHECK(degeneracy3(to_hypergraph(x)).value == 1);
    }
}

TEST_CASE("decompose pinned example: two shared-pair edges") {
    const Hypergraph3 h(4, {{0, 1, 2}, {0, 1, 3}});
    const auto parts = decompose_hedgehogs(h);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].body() == std::vector<int>{0, 1});
    CHECK(parts[0].spikes() == std::vector<Spike>{{2, 0, 1}, {3, 0, 1}});
}

TEST_CASE("decompose pinned example: tight path needs two rounds") {
    const Hypergraph3 h(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
    const auto parts = decompose_hedgehogs(h);
    REQUIRE(parts.size() == 2);
    // round one peels {0,1,2} (spike 0) and {2,3,4} (spike 4)
    CHECK(parts[0].body() == std::vector<int>{1, 2, 3});
    CHECK(parts[0].spikes() == std::vector<Spike>{{0, 1, 2}, {4, 2, 3}});
    // round two peels {1,2,3} with spike 1
    CHECK(parts[1].body() == std::vector<int>{2, 3});
    CHECK(parts[1].spikes() == std::vector<Spike>{{1, 2, 3}});
}

TEST_CASE("decompose edge cases") {
    CHECK(decompose_hedgehogs(Hypergraph3(0, {})).empty());
    CHECK(decompose_hedgehogs(Hypergraph3(6, {})).empty()); // no edges, trivially done

    // K_4^(3) is 3-degenerate
    const Hypergraph3 k4(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK_THROWS_AS(decompose_hedgehogs(k4), std::invalid_argument);

    // isolated vertex 3
    const Hypergraph3 iso(4, {{0, 1, 2}});
    CHECK_THROWS_AS(decompose_hedgehogs(iso), std::invalid_argument);
}

TEST_CASE("decompose covers random 1-degenerate hypergraphs exactly") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const int n = 5 + static_cast<int>(seed % 20);
        const auto h = random_one_degenerate(n, 1.0, derive_seed(31, seed));
        const auto parts = decompose_hedgehogs(h);
        std::vector<Edge3> covered;
        for (const auto& part : parts) {
            const auto v = validate_hedgehog(to_hypergraph(part, n), part.body());
            CHECK(v.valid);
            for (const auto& s : part.spikes()) {
                Edge3 e{s.u, s.v, s.vertex};
                std::sort(e.begin(), e.end());
                covered.push_back(e);
            }
        }
        std::sort(covered.begin(), covered.end(), [](const Edge3& a, const Edge3& b) {
            return triple_rank(a[0], a[1], a[2]) < triple_rank(b[0], b[1], b[2]);
        });
        CHECK(covered == h.edges()); // edge-disjoint and exhaustive
    }
}

TEST_CASE("random_one_degenerate is always 1-degenerate") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto h = random_one_degenerate(20, 0.7, derive_seed(37, seed));
        CHECK(degeneracy3(h).value <= 1);
    }
}

TEST_CASE("spike-pair graph degeneracy stays below 2 sqrt(n)") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n_total = 3 + static_cast<int>(derive_seed(41, seed) % 120);
        const auto h = random_hedgehog(n_total, derive_seed(42, seed));
        const auto f = spike_pair_graph(h);
        CHECK(f.m() <= h.spikes().size());
        CHECK(degeneracy2(f).value <= 2.0 * std::sqrt(static_cast<double>(n_total)));
    }
}
