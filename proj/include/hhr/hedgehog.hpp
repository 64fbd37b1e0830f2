#pragma once

#include "hhr/graph2.hpp"
#include "hhr/hypergraph3.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hhr {

// One spike: vertex `vertex` forms the single edge {u, v, vertex} with the
// body pair {u, v}, u < v.
struct Spike {
    int vertex;
    int u, v;
    bool operator==(const Spike&) const = default;
};

// Generalised hedgehog: a body, and spike vertices each bound to exactly one
// body pair. `n_total` is the vertex count of the hedgehog as a labelled
// hypergraph; when it exceeds |body| + |spikes| the remaining ids in
// [0, n_total) are isolated padding, which requires body/spike ids to lie
// inside [0, n_total). Sub-hedgehogs cut out of a larger hypergraph keep
// their original (sparse) ids and carry no padding.
class Hedgehog {
public:
    Hedgehog(std::vector<int> body, std::vector<Spike> spikes, int n_total);

    const std::vector<int>& body() const { return body_; }
    const std::vector<Spike>& spikes() const { return spikes_; }
    int n_total() const { return n_total_; }
    int body_size() const { return static_cast<int>(body_.size()); }
    int spike_count() const { return static_cast<int>(spikes_.size()); }

    bool is_body(int v) const;
    // Ids in [0, n_total) contained in neither body nor spikes.
    std::vector<int> padding_vertices() const;

    bool operator==(const Hedgehog& other) const {
        return body_ == other.body_ && spikes_ == other.spikes_ && n_total_ == other.n_total_;
    }

private:
    std::vector<int> body_;    // sorted ascending
    std::vector<Spike> spikes_; // sorted by spike vertex
    int n_total_;
};

// Body 0..b-1, one spike per body pair in colex pair order (ids b..).
Hedgehog standard_hedgehog(int b);

// Parameters of the heavy-core hedgehog: body size b, heavy core the first k
// body vertices, m extra spikes on each heavy pair, padded to n_total
// vertices with further spikes.
struct HStarParams {
    long long b = 0;
    long long k = 0;
    long long m = 0;
    long long n_total = 0;

    long long pre_padding_vertices() const; // b + C(b,2) + C(k,2)*m
    void check() const;                     // throws when the invariants fail
};

Hedgehog build_hstar(const HStarParams& p);

// b = floor(sqrt(n)/50), k = 10, m = floor(n/100), n_total = n.
// Throws when b < k or the vertex budget is violated.
HStarParams paper_hstar_params(long long n);

struct HedgehogValidation {
    bool valid = false;
    std::string reason;
    std::optional<Hedgehog> hedgehog;
};

// A hypergraph is a hedgehog with the given body iff every edge has exactly
// two body vertices and every non-body vertex with positive degree has
// degree exactly one. Isolated non-body vertices become padding.
HedgehogValidation validate_hedgehog(const Hypergraph3& h, const std::vector<int>& body);

// The graph F on body *positions* (indices into body()): an edge per body
// pair that carries at least one spike; multiplicities collapse.
Graph2 spike_pair_graph(const Hedgehog& h);

// Edge set {u, v, spike} per spike record; vertex count is n_total or the
// max id + 1, whichever is larger (or `ambient_n` when larger still).
Hypergraph3 to_hypergraph(const Hedgehog& h, int ambient_n = 0);

// Decomposition of a 1-degenerate hypergraph without isolated vertices into
// edge-disjoint hedgehogs. Each round peels every edge that touches a
// current degree-1 vertex; the smallest-id degree-1 vertex in an edge serves
// as its spike. Throws when H is not 1-degenerate, or when it has both edges
// and isolated vertices.
std::vector<Hedgehog> decompose_hedgehogs(const Hypergraph3& h);

// Seeded generators used by experiments and the acceptance suite.
Hedgehog random_hedgehog(int n_total, int body_size, std::uint64_t seed);
Hedgehog random_hedgehog(int n_total, std::uint64_t seed); // random body size
// Reverse-gluing generator: every vertex after the second attaches one new
// edge to a random pair of earlier vertices with probability attach_prob;
// the result is always 1-degenerate. Isolated vertices are kept (strip or
// raise attach_prob to 1 to avoid them).
Hypergraph3 random_one_degenerate(int n, double attach_prob, std::uint64_t seed);

} // namespace hhr
