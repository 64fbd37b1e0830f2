#include "hhr/colouring.hpp"

#include "hhr/combinadic.hpp"
#include "hhr/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace hhr {

TripleColouring TripleColouring::derived(Graph2 gamma) {
    TripleColouring c;
    c.n_ = gamma.n();
    c.derived_ = true;
    c.gamma_ = std::move(gamma);
    return c;
}

TripleColouring TripleColouring::from_bits(int n, std::vector<std::uint64_t> words) {
    if (n < 0) throw std::invalid_argument("TripleColouring: negative host size");
    const std::uint64_t need = (n_triples(static_cast<std::uint64_t>(n)) + 63) / 64;
    if (words.size() != need)
        throw std::invalid_argument("TripleColouring: bit array has wrong length");
    // mask tail bits so equality and serialization are canonical
    const std::uint64_t bits = n_triples(static_cast<std::uint64_t>(n));
    if (bits % 64 != 0 && !words.empty())
        words.back() &= (1ull << (bits % 64)) - 1;
    TripleColouring c;
    c.n_ = n;
    c.words_ = std::move(words);
    return c;
}

TripleColouring TripleColouring::uniform(int n, Colour colour) {
    const std::uint64_t bits = n_triples(static_cast<std::uint64_t>(n));
    std::vector<std::uint64_t> words((bits + 63) / 64,
                                     colour == Colour::red ? ~0ull : 0ull);
    return from_bits(n, std::move(words));
}

TripleColouring TripleColouring::random(int n, double red_bias, std::uint64_t seed) {
    if (red_bias < 0.0 || red_bias > 1.0)
        throw std::invalid_argument("TripleColouring: red_bias outside [0,1]");
    const std::uint64_t bits = n_triples(static_cast<std::uint64_t>(n));
    std::vector<std::uint64_t> words((bits + 63) / 64, 0ull);
    SplitMix64 gen(seed);
    for (std::uint64_t r = 0; r < bits; ++r)
        if (gen.chance(red_bias)) words[r / 64] |= 1ull << (r % 64);
    return from_bits(n, std::move(words));
}

std::uint64_t TripleColouring::triple_count() const {
    return n_triples(static_cast<std::uint64_t>(n_));
}

const Graph2& TripleColouring::gamma() const {
    if (!derived_) throw std::logic_error("TripleColouring: not in derived form");
    return gamma_;
}

const std::vector<std::uint64_t>& TripleColouring::words() const {
    if (derived_) throw std::logic_error("TripleColouring: derived form has no bit array");
    return words_;
}

bool TripleColouring::red(int u, int v, int w) const {
    int a = u, b = v, c = w;
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    if (a < 0 || c >= n_ || a == b || b == c)
        throw std::invalid_argument("TripleColouring: need three distinct vertices in range");
    if (derived_)
        return gamma_.has_edge(a, b) || gamma_.has_edge(a, c) || gamma_.has_edge(b, c);
    const std::uint64_t r = triple_rank(a, b, c);
    return (words_[r / 64] >> (r % 64)) & 1ull;
}

bool TripleColouring::red_by_rank(std::uint64_t rank) const {
    if (derived_) {
        const auto t = triple_unrank(rank, n_);
        return red(t.i, t.j, t.k);
    }
    if (rank >= triple_count()) throw std::out_of_range("TripleColouring: rank out of range");
    return (words_[rank / 64] >> (rank % 64)) & 1ull;
}

std::pair<int, int> TripleColouring::pair_colour_counts(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("TripleColouring: invalid pair");
    if (derived_) {
        int red_count;
        if (gamma_.has_edge(u, v)) {
            red_count = n_ - 2; // every completion contains the edge uv
        } else {
            VertexSet reach = gamma_.neighbours(u) | gamma_.neighbours(v);
            reach.reset(static_cast<std::size_t>(u));
            reach.reset(static_cast<std::size_t>(v));
            red_count = static_cast<int>(reach.count());
        }
        return {red_count, n_ - 2 - red_count};
    }
    int red_count = 0;
    for (int w = 0; w < n_; ++w)
        if (w != u && w != v && red(u, v, w)) ++red_count;
    return {red_count, n_ - 2 - red_count};
}

TripleColouring TripleColouring::materialise(std::uint64_t max_bits) const {
    const std::uint64_t bits = triple_count();
    if (bits > max_bits)
        throw std::length_error("TripleColouring: materialise budget exceeded");
    if (!derived_) {
        TripleColouring copy = *this;
        return copy;
    }
    std::vector<std::uint64_t> words((bits + 63) / 64, 0ull);
    std::uint64_t rank = 0;
    for (int k = 2; k < n_; ++k)
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i, ++rank)
                if (red(i, j, k)) words[rank / 64] |= 1ull << (rank % 64);
    return from_bits(n_, std::move(words));
}

} // namespace hhr
