#pragma once

#include "hhr/graph2.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hhr {

enum class Colour { red, blue };

inline Colour other(Colour c) { return c == Colour::red ? Colour::blue : Colour::red; }
inline const char* colour_name(Colour c) { return c == Colour::red ? "red" : "blue"; }

// Total red/blue colouring of all triples of [0, N). Two forms share the
// interface: an explicit bit array (bit at colex rank set = red) and an
// oracle derived from a 2-graph (triple red iff it contains an edge of the
// source graph). Immutable.
class TripleColouring {
public:
    static TripleColouring derived(Graph2 gamma);
    static TripleColouring from_bits(int n, std::vector<std::uint64_t> words);
    static TripleColouring uniform(int n, Colour c);
    // Each triple red independently with probability red_bias; the splitmix64
    // stream is advanced exactly once per colex rank.
    static TripleColouring random(int n, double red_bias, std::uint64_t seed);

    int n() const { return n_; }
    std::uint64_t triple_count() const;
    bool is_derived() const { return derived_; }
    const Graph2& gamma() const;

    bool red(int u, int v, int w) const; // distinct vertices, any order
    bool red_by_rank(std::uint64_t rank) const;
    Colour colour(int u, int v, int w) const {
        return red(u, v, w) ? Colour::red : Colour::blue;
    }

    // (#red, #blue) completions {u,v,w}, summing to N-2. Derived colourings
    // use neighbour-set arithmetic instead of enumerating w.
    std::pair<int, int> pair_colour_counts(int u, int v) const;

    // Explicit copy of this colouring. Throws when C(N,3) exceeds max_bits.
    TripleColouring materialise(std::uint64_t max_bits = default_materialise_budget) const;

    const std::vector<std::uint64_t>& words() const; // explicit form only

    static constexpr std::uint64_t default_materialise_budget = 1ull << 33; // 1 GiB of bits

private:
    TripleColouring() = default;

    int n_ = 0;
    bool derived_ = false;
    Graph2 gamma_;                     // derived form
    std::vector<std::uint64_t> words_; // explicit form
};

} // namespace hhr
