#include "hhr/colouring.hpp"
#include "hhr/combinadic.hpp"
#include "hhr/construction.hpp"
#include "hhr/rng.hpp"

#include <doctest.h>

using namespace hhr;

namespace {

Graph2 single_edge_gamma() {
    Graph2 g(4);
    g.add_edge(0, 1);
    return g;
}

// enumeration oracle for pair counts, independent of the bitset arithmetic
std::pair<int, int> counts_by_enumeration(const TripleColouring& c, int u, int v) {
    int red = 0, blue = 0;
    for (int w = 0; w < c.n(); ++w) {
        if (w == u || w == v) continue;
        (c.red(u, v, w) ? red : blue) += 1;
    }
    return {red, blue};
}

} // namespace

TEST_CASE("splitmix64 reference stream") {
    SplitMix64 a(0);
    CHECK(a.next() == 0xE220A8397B1DCDAFull);
    CHECK(a.next() == 0x6E789E6AA1B965F4ull);
    CHECK(a.next() == 0x06C45D188009454Full);
    SplitMix64 b(1234567);
    CHECK(b.next() == 6457827717110365317ull);
    CHECK(b.next() == 3203168211198807973ull);
    CHECK(b.next() == 9817491932198370423ull);
}

TEST_CASE("derived colouring applies the containment rule") {
    const auto c = TripleColouring::derived(single_edge_gamma());
    CHECK(c.red(0, 1, 2));
    CHECK(c.red(0, 1, 3));
    CHECK_FALSE(c.red(0, 2, 3));
    CHECK_FALSE(c.red(1, 2, 3));
    CHECK(c.red(3, 1, 0)); // argument order is irrelevant

    const auto empty = TripleColouring::derived(Graph2(5));
    for (std::uint64_t r = 0; r < empty.triple_count(); ++r) CHECK_FALSE(empty.red_by_rank(r));

    Graph2 k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    const auto full = TripleColouring::derived(k4);
    for (std::uint64_t r = 0; r < full.triple_count(); ++r) CHECK(full.red_by_rank(r));
}

TEST_CASE("pair_colour_counts pinned examples") {
    const auto c = TripleColouring::derived(single_edge_gamma());
    CHECK(c.pair_colour_counts(0, 1) == std::pair<int, int>{2, 0});
    CHECK(c.pair_colour_counts(2, 3) == std::pair<int, int>{0, 2});

    const auto all_red = TripleColouring::uniform(5, Colour::red);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            CHECK(all_red.pair_colour_counts(u, v) == std::pair<int, int>{3, 0});

    CHECK_THROWS_AS(c.pair_colour_counts(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(c.pair_colour_counts(0, 4), std::invalid_argument);
}

TEST_CASE("pair counts agree with enumeration and the degree bound") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 5 + static_cast<int>(seed % 8); // up to 12
        const auto gamma = sample_gnp(n, 0.4, derive_seed(51, seed));
        const auto c = TripleColouring::derived(gamma);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const auto fast = c.pair_colour_counts(u, v);
                CHECK(fast == counts_by_enumeration(c, u, v));
                CHECK(fast.first + fast.second == n - 2);
                if (gamma.has_edge(u, v))
                    CHECK(fast.first == n - 2);
                else
                    CHECK(fast.first <= gamma.degree(u) + gamma.degree(v));
            }
    }
}

TEST_CASE("random colouring honours bias edges and the determinism contract") {
    const auto red = TripleColouring::random(6, 1.0, 5);
    const auto blue = TripleColouring::random(6, 0.0, 5);
    for (std::uint64_t r = 0; r < red.triple_count(); ++r) {
        CHECK(red.red_by_rank(r));
        CHECK_FALSE(blue.red_by_rank(r));
    }
    const auto a = TripleColouring::random(6, 0.5, 7);
    const auto b = TripleColouring::random(6, 0.5, 7);
    CHECK(a.words() == b.words());
    const auto c = TripleColouring::random(6, 0.5, 8);
    CHECK(a.words() != c.words()); // different seed, different bits
}

TEST_CASE("materialise reproduces the oracle bit for bit") {
    const auto c = TripleColouring::derived(single_edge_gamma());
    const auto mat = c.materialise();
    REQUIRE(mat.triple_count() == 4);
    CHECK(mat.words()[0] == 0b0011ull); // ranks 0,1 red; 2,3 blue

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const int n = 6 + static_cast<int>(seed % 7); // up to 12
        const auto gamma = sample_gnp(n, 0.35, derive_seed(61, seed));
        const auto derived = TripleColouring::derived(gamma);
        const auto expl = derived.materialise();
        for (std::uint64_t r = 0; r < derived.triple_count(); ++r)
            CHECK(expl.red_by_rank(r) == derived.red_by_rank(r));
        // idempotence
        CHECK(expl.materialise().words() == expl.words());
    }
}

TEST_CASE("materialise respects the bit budget") {
    const auto c = TripleColouring::derived(Graph2(40));
    CHECK_THROWS_AS(c.materialise(100), std::length_error);
}
