#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace hhr {

inline constexpr std::uint64_t binom2(std::uint64_t n) {
    return n < 2 ? 0 : n * (n - 1) / 2;
}

inline constexpr std::uint64_t binom3(std::uint64_t n) {
    return n < 3 ? 0 : n * (n - 1) / 2 * (n - 2) / 3;
}

inline constexpr std::uint64_t n_pairs(std::uint64_t n) { return binom2(n); }
inline constexpr std::uint64_t n_triples(std::uint64_t n) { return binom3(n); }

namespace detail {
// Largest x >= floor with f(x) <= rank, for f strictly increasing past floor.
template <typename F>
std::uint64_t last_below(F f, std::uint64_t rank, std::uint64_t floor) {
    std::uint64_t lo = floor, hi = floor + 1;
    while (f(hi) <= rank) hi *= 2;
    while (lo + 1 < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        (f(mid) <= rank ? lo : hi) = mid;
    }
    return lo;
}
} // namespace detail

// Colex rank of the pair {i, j}, 0 <= i < j. Pairs of [0,N) get ranks
// 0 .. C(N,2)-1 in the order (0,1), (0,2), (1,2), (0,3), ...
inline std::uint64_t pair_rank(int i, int j) {
    if (i < 0 || i >= j) throw std::invalid_argument("pair_rank: need 0 <= i < j");
    return static_cast<std::uint64_t>(i) + binom2(static_cast<std::uint64_t>(j));
}

inline std::pair<int, int> pair_unrank(std::uint64_t rank) {
    const std::uint64_t j = detail::last_below(binom2, rank, 1);
    return {static_cast<int>(rank - binom2(j)), static_cast<int>(j)};
}

struct Triple {
    int i, j, k;
    bool operator==(const Triple&) const = default;
};

// Colex rank of the triple {i, j, k}, 0 <= i < j < k:
// rank = C(i,1) + C(j,2) + C(k,3). Triples of [0,N) get 0 .. C(N,3)-1.
inline std::uint64_t triple_rank(int i, int j, int k) {
    if (i < 0 || i >= j || j >= k)
        throw std::invalid_argument("triple_rank: need 0 <= i < j < k");
    return static_cast<std::uint64_t>(i) + binom2(static_cast<std::uint64_t>(j)) +
           binom3(static_cast<std::uint64_t>(k));
}

inline Triple triple_unrank(std::uint64_t rank, int n) {
    if (n < 3 || rank >= binom3(static_cast<std::uint64_t>(n)))
        throw std::out_of_range("triple_unrank: rank out of range for host size");
    const std::uint64_t k = detail::last_below(binom3, rank, 2);
    const auto [i, j] = pair_unrank(rank - binom3(k));
    return {i, j, static_cast<int>(k)};
}

} // namespace hhr
