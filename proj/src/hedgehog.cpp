#include "hhr/hedgehog.hpp"

#include "hhr/combinadic.hpp"
#include "hhr/degeneracy.hpp"
#include "hhr/rng.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace hhr {

Hedgehog::Hedgehog(std::vector<int> body, std::vector<Spike> spikes, int n_total)
    : body_(std::move(body)), spikes_(std::move(spikes)), n_total_(n_total) {
    std::sort(body_.begin(), body_.end());
    if (std::adjacent_find(body_.begin(), body_.end()) != body_.end())
        throw std::invalid_argument("Hedgehog: duplicate body vertex");
    if (!body_.empty() && body_.front() < 0)
        throw std::invalid_argument("Hedgehog: negative vertex id");

    std::sort(spikes_.begin(), spikes_.end(),
              [](const Spike& a, const Spike& b) { return a.vertex < b.vertex; });
    int max_id = body_.empty() ? -1 : body_.back();
    for (auto& s : spikes_) {
        if (s.u > s.v) std::swap(s.u, s.v);
        if (s.u == s.v || !is_body(s.u) || !is_body(s.v))
            throw std::invalid_argument("Hedgehog: spike pair must be two distinct body vertices");
        if (is_body(s.vertex)) throw std::invalid_argument("Hedgehog: spike vertex inside body");
        max_id = std::max(max_id, s.vertex);
    }
    for (std::size_t i = 1; i < spikes_.size(); ++i)
        if (spikes_[i].vertex == spikes_[i - 1].vertex)
            throw std::invalid_argument("Hedgehog: spike vertex bound to two pairs");

    const int named = body_size() + spike_count();
    if (n_total_ < named)
        throw std::invalid_argument("Hedgehog: n_total smaller than body plus spikes");
    if (n_total_ > named && max_id >= n_total_)
        throw std::invalid_argument("Hedgehog: padding requires ids within [0, n_total)");
}

bool Hedgehog::is_body(int v) const {
    return std::binary_search(body_.begin(), body_.end(), v);
}

std::vector<int> Hedgehog::padding_vertices() const {
    if (n_total_ == body_size() + spike_count()) return {};
    std::vector<int> named;
    named.reserve(body_.size() + spikes_.size());
    named.insert(named.end(), body_.begin(), body_.end());
    for (const auto& s : spikes_) named.push_back(s.vertex);
    std::sort(named.begin(), named.end());
    std::vector<int> out;
    std::size_t at = 0;
    for (int v = 0; v < n_total_; ++v) {
        if (at < named.size() && named[at] == v)
            ++at;
        else
            out.push_back(v);
    }
    return out;
}

Hedgehog standard_hedgehog(int b) {
    if (b < 2) throw std::invalid_argument("standard_hedgehog: body size must be >= 2");
    std::vector<int> body(static_cast<std::size_t>(b));
    for (int v = 0; v < b; ++v) body[static_cast<std::size_t>(v)] = v;
    std::vector<Spike> spikes;
    const auto pairs = binom2(static_cast<std::uint64_t>(b));
    spikes.reserve(pairs);
    for (std::uint64_t r = 0; r < pairs; ++r) {
        const auto [u, v] = pair_unrank(r);
        spikes.push_back({b + static_cast<int>(r), u, v});
    }
    return Hedgehog(std::move(body), std::move(spikes), b + static_cast<int>(pairs));
}

long long HStarParams::pre_padding_vertices() const {
    return b + static_cast<long long>(binom2(static_cast<std::uint64_t>(b))) +
           static_cast<long long>(binom2(static_cast<std::uint64_t>(k))) * m;
}

void HStarParams::check() const {
    if (b < 2) throw std::invalid_argument("HStarParams: body size must be >= 2");
    if (k < 1 || k > b) throw std::invalid_argument("HStarParams: need 1 <= k <= b");
    if (m < 0) throw std::invalid_argument("HStarParams: negative spike multiplicity");
    if (pre_padding_vertices() > n_total)
        throw std::invalid_argument("HStarParams: vertex budget violated");
}

Hedgehog build_hstar(const HStarParams& p) {
    p.check();
    const int b = static_cast<int>(p.b);
    std::vector<int> body(static_cast<std::size_t>(b));
    for (int v = 0; v < b; ++v) body[static_cast<std::size_t>(v)] = v;

    std::vector<Spike> spikes;
    spikes.reserve(static_cast<std::size_t>(p.n_total - p.b));
    int next_id = b;
    const std::uint64_t pairs = binom2(static_cast<std::uint64_t>(b));
    // base layer: one spike per body pair
    for (std::uint64_t r = 0; r < pairs; ++r) {
        const auto [u, v] = pair_unrank(r);
        spikes.push_back({next_id++, u, v});
    }
    // heavy core: m extra spikes on each pair of the first k body vertices
    const std::uint64_t heavy_pairs = binom2(static_cast<std::uint64_t>(p.k));
    for (std::uint64_t r = 0; r < heavy_pairs; ++r) {
        const auto [u, v] = pair_unrank(r);
        for (long long i = 0; i < p.m; ++i) spikes.push_back({next_id++, u, v});
    }
    // padding: round-robin over all body pairs in colex order
    std::uint64_t pad = 0;
    while (next_id < p.n_total) {
        const auto [u, v] = pair_unrank(pad++ % pairs);
        spikes.push_back({next_id++, u, v});
    }
    return Hedgehog(std::move(body), std::move(spikes), static_cast<int>(p.n_total));
}

HStarParams paper_hstar_params(long long n) {
    if (n < 4) throw std::invalid_argument("paper_hstar_params: n too small");
    const auto isqrt = static_cast<long long>(std::sqrt(static_cast<long double>(n)));
    long long root = isqrt;
    while ((root + 1) * (root + 1) <= n) ++root;
    while (root * root > n) --root;
    HStarParams p{root / 50, 10, n / 100, n};
    p.check();
    return p;
}

HedgehogValidation validate_hedgehog(const Hypergraph3& h, const std::vector<int>& body) {
    HedgehogValidation out;
    std::vector<bool> in_body(static_cast<std::size_t>(h.n()), false);
    for (int v : body) {
        if (v < 0 || v >= h.n()) {
            out.reason = "body vertex out of range";
            return out;
        }
        in_body[static_cast<std::size_t>(v)] = true;
    }

    std::vector<Spike> spikes;
    spikes.reserve(h.m());
    for (const auto& e : h.edges()) {
        int spike = -1, nb = 0;
        for (int v : e)
            if (!in_body[static_cast<std::size_t>(v)]) {
                spike = v;
                ++nb;
            }
        if (nb != 1) {
            out.reason = "edge {" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," +
                         std::to_string(e[2]) + "} has " + std::to_string(3 - nb) +
                         " body vertices (want 2)";
            return out;
        }
        if (h.degree(spike) != 1) {
            out.reason = "spike vertex " + std::to_string(spike) + " has degree " +
                         std::to_string(h.degree(spike)) + " (want 1)";
            return out;
        }
        const int a = e[0] == spike ? e[1] : e[0];
        const int c = e[2] == spike ? e[1] : e[2];
        spikes.push_back({spike, a, c});
    }
    out.valid = true;
    out.hedgehog = Hedgehog(body, std::move(spikes), h.n());
    return out;
}

Graph2 spike_pair_graph(const Hedgehog& h) {
    const auto& body = h.body();
    Graph2 f(h.body_size());
    auto position = [&body](int v) {
        return static_cast<int>(std::lower_bound(body.begin(), body.end(), v) - body.begin());
    };
    for (const auto& s : h.spikes()) f.add_edge(position(s.u), position(s.v));
    return f;
}

Hypergraph3 to_hypergraph(const Hedgehog& h, int ambient_n) {
    int n = std::max(h.n_total(), ambient_n);
    for (const auto& s : h.spikes()) n = std::max(n, s.vertex + 1);
    if (!h.body().empty()) n = std::max(n, h.body().back() + 1);
    std::vector<Edge3> edges;
    edges.reserve(h.spikes().size());
    for (const auto& s : h.spikes()) edges.push_back({s.u, s.v, s.vertex});
    return Hypergraph3(n, std::move(edges));
}

std::vector<Hedgehog> decompose_hedgehogs(const Hypergraph3& h) {
    if (h.m() == 0) return {};
    const auto deg = degeneracy3(h);
    if (deg.value > 1)
        throw std::invalid_argument("decompose_hedgehogs: hypergraph is not 1-degenerate (D=" +
                                    std::to_string(deg.value) + ")");
    for (int v = 0; v < h.n(); ++v)
        if (h.degree(v) == 0)
            throw std::invalid_argument("decompose_hedgehogs: isolated vertex " +
                                        std::to_string(v));

    std::vector<int> degree(static_cast<std::size_t>(h.n()));
    for (int v = 0; v < h.n(); ++v) degree[static_cast<std::size_t>(v)] = h.degree(v);
    std::vector<bool> alive(h.m(), true);
    std::size_t remaining = h.m();

    std::vector<Hedgehog> parts;
    while (remaining > 0) {
        // edges touching a current degree-1 vertex form this round's part
        std::vector<int> part_edges;
        for (int id = 0; id < static_cast<int>(h.m()); ++id) {
            if (!alive[static_cast<std::size_t>(id)]) continue;
            for (int v : h.edge(id))
                if (degree[static_cast<std::size_t>(v)] == 1) {
                    part_edges.push_back(id);
                    break;
                }
        }
        if (part_edges.empty())
            throw std::logic_error("decompose_hedgehogs: no degree-1 vertex left");

        std::set<int> body;
        std::vector<Spike> spikes;
        spikes.reserve(part_edges.size());
        for (int id : part_edges) {
            const auto& e = h.edge(id);
            int spike = -1;
            for (int v : e) // smallest-id degree-1 vertex serves as the spike
                if (degree[static_cast<std::size_t>(v)] == 1) {
                    spike = v;
                    break;
                }
            const int a = e[0] == spike ? e[1] : e[0];
            const int c = e[2] == spike ? e[1] : e[2];
            spikes.push_back({spike, a, c});
            body.insert(a);
            body.insert(c);
        }
        for (int id : part_edges) {
            alive[static_cast<std::size_t>(id)] = false;
            --remaining;
            for (int v : h.edge(id)) --degree[static_cast<std::size_t>(v)];
        }
        std::vector<int> body_list(body.begin(), body.end());
        const int named = static_cast<int>(body_list.size() + spikes.size());
        parts.emplace_back(std::move(body_list), std::move(spikes), named);
    }
    return parts;
}

Hedgehog random_hedgehog(int n_total, int body_size, std::uint64_t seed) {
    if (body_size < 2 || body_size >= n_total)
        throw std::invalid_argument("random_hedgehog: need 2 <= body_size < n_total");
    SplitMix64 gen(seed);
    std::vector<int> body(static_cast<std::size_t>(body_size));
    for (int v = 0; v < body_size; ++v) body[static_cast<std::size_t>(v)] = v;
    std::vector<Spike> spikes;
    spikes.reserve(static_cast<std::size_t>(n_total - body_size));
    const std::uint64_t pairs = binom2(static_cast<std::uint64_t>(body_size));
    for (int v = body_size; v < n_total; ++v) {
        const auto [a, c] = pair_unrank(gen.below(pairs));
        spikes.push_back({v, a, c});
    }
    return Hedgehog(std::move(body), std::move(spikes), n_total);
}

Hedgehog random_hedgehog(int n_total, std::uint64_t seed) {
    if (n_total < 3) throw std::invalid_argument("random_hedgehog: need n_total >= 3");
    SplitMix64 gen(seed);
    const int body_size = 2 + static_cast<int>(gen.below(static_cast<std::uint64_t>(n_total - 2)));
    return random_hedgehog(n_total, body_size, gen.next());
}

Hypergraph3 random_one_degenerate(int n, double attach_prob, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_one_degenerate: need n >= 3");
    SplitMix64 gen(seed);
    std::vector<Edge3> edges;
    for (int v = 2; v < n; ++v) {
        if (!gen.chance(attach_prob)) continue;
        const int a = static_cast<int>(gen.below(static_cast<std::uint64_t>(v)));
        int c = static_cast<int>(gen.below(static_cast<std::uint64_t>(v - 1)));
        if (c >= a) ++c;
        edges.push_back({a, c, v});
    }
    return Hypergraph3(n, std::move(edges));
}

} // namespace hhr
