#include "hhr/embedding.hpp"

#include "hhr/combinadic.hpp"
#include "hhr/degeneracy.hpp"

#include <algorithm>
#include <stdexcept>

namespace hhr {

AuxGraph build_aux_graph(const TripleColouring& c, int d_r, int d_b) {
    if (d_r < 1 || d_b < 1)
        throw std::invalid_argument("build_aux_graph: thresholds must be >= 1");
    const int n = c.n();
    AuxGraph aux{n, d_r, d_b, Graph2(n), Graph2(n)};
    if (c.is_derived()) {
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                const auto [red_cnt, blue_cnt] = c.pair_colour_counts(u, v);
                if (red_cnt < d_r) aux.red_pairs.add_edge(u, v);
                if (blue_cnt < d_b) aux.blue_pairs.add_edge(u, v);
            }
        return aux;
    }
    // explicit form: one pass over all triples, tallying red triples per pair
    std::vector<std::uint32_t> red_count(n_pairs(static_cast<std::uint64_t>(n)), 0);
    std::uint64_t rank = 0;
    for (int k = 2; k < n; ++k)
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i, ++rank)
                if (c.red_by_rank(rank)) {
                    ++red_count[pair_rank(i, j)];
                    ++red_count[pair_rank(i, k)];
                    ++red_count[pair_rank(j, k)];
                }
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            const int red = static_cast<int>(red_count[pair_rank(u, v)]);
            if (red < d_r) aux.red_pairs.add_edge(u, v);
            if (n - 2 - red < d_b) aux.blue_pairs.add_edge(u, v);
        }
    return aux;
}

Lemma4Report check_lemma4(const TripleColouring& c, int d_r, int d_b) {
    if (c.n() < d_r + d_b + 1)
        throw std::invalid_argument("check_lemma4: host must have at least d_r + d_b + 1 vertices");
    const auto aux = build_aux_graph(c, d_r, d_b);
    Lemma4Report rep;
    rep.holds = true;
    rep.aux_degrees.reserve(static_cast<std::size_t>(c.n()));
    for (int v = 0; v < c.n(); ++v) {
        const int rd = aux.red_pairs.degree(v);
        const int bd = aux.blue_pairs.degree(v);
        rep.aux_degrees.emplace_back(rd, bd);
        if (rep.holds && !(rd <= 2 * d_b || bd <= 2 * d_r)) {
            rep.holds = false;
            rep.violating_vertex = v;
        }
    }
    return rep;
}

VertexMarking mark_vertices(const AuxGraph& aux, int threshold) {
    if (threshold < 0) throw std::invalid_argument("mark_vertices: negative threshold");
    VertexMarking out;
    out.marks.reserve(static_cast<std::size_t>(aux.n));
    int red_count = 0;
    for (int v = 0; v < aux.n; ++v) {
        const bool red = aux.red_pairs.degree(v) <= threshold;
        out.marks.push_back(red ? Colour::red : Colour::blue);
        if (red) ++red_count;
    }
    out.majority_colour = 2 * red_count >= aux.n ? Colour::red : Colour::blue;
    for (int v = 0; v < aux.n; ++v)
        if (out.marks[static_cast<std::size_t>(v)] == out.majority_colour) out.v1.push_back(v);
    return out;
}

namespace {

int max_vertex_id(const Hedgehog& h) {
    int id = h.n_total() - 1;
    if (!h.body().empty()) id = std::max(id, h.body().back());
    for (const auto& s : h.spikes()) id = std::max(id, s.vertex);
    return id;
}

} // namespace

CfrResult cfr_embed(const TripleColouring& c, const Hedgehog& h_red, const Hedgehog& h_blue,
                    int n) {
    if (n < 1) throw std::invalid_argument("cfr_embed: n must be >= 1");
    if (h_red.n_total() > n || h_blue.n_total() > n)
        throw std::invalid_argument("cfr_embed: hedgehog exceeds the size parameter n");

    const int host_n = c.n();
    const auto aux = build_aux_graph(c, n, n);
    const auto marking = mark_vertices(aux, 2 * n);
    const Colour colour = marking.majority_colour;
    const Hedgehog& target = colour == Colour::red ? h_red : h_blue;
    const Graph2& scarce = colour == Colour::red ? aux.red_pairs : aux.blue_pairs;

    CfrResult result;
    if (target.n_total() > host_n) {
        result.failed_stage = CfrStage::body;
        result.detail = "host smaller than the hedgehog";
        return result;
    }

    const auto& body = target.body();
    const Graph2 f = spike_pair_graph(target);
    const auto degen = degeneracy2(f);

    std::vector<char> used(static_cast<std::size_t>(host_n), 0);
    std::vector<int> body_image(body.size(), -1);
    // walk the removal order backwards: each position then has at most D
    // F-neighbours already placed
    for (auto it = degen.order.rbegin(); it != degen.order.rend(); ++it) {
        const int pos = *it;
        int choice = -1;
        for (int u : marking.v1) {
            if (used[static_cast<std::size_t>(u)]) continue;
            bool admissible = true;
            const auto& nb = f.neighbours(pos);
            for (auto q = nb.find_first(); q != VertexSet::npos; q = nb.find_next(q)) {
                const int img = body_image[q];
                if (img >= 0 && scarce.has_edge(img, u)) {
                    admissible = false;
                    break;
                }
            }
            if (admissible) {
                choice = u;
                break;
            }
        }
        if (choice < 0) {
            result.failed_stage = CfrStage::body;
            result.blocked_vertex = body[static_cast<std::size_t>(pos)];
            result.detail = "no admissible majority-class vertex for a body vertex";
            return result;
        }
        body_image[static_cast<std::size_t>(pos)] = choice;
        used[static_cast<std::size_t>(choice)] = 1;
    }

    Embedding emb;
    emb.colour = colour;
    emb.map.assign(static_cast<std::size_t>(max_vertex_id(target)) + 1, -1);
    for (std::size_t i = 0; i < body.size(); ++i) emb.map[static_cast<std::size_t>(body[i])] = body_image[i];

    for (const auto& s : target.spikes()) {
        const int a = emb.map[static_cast<std::size_t>(s.u)];
        const int b = emb.map[static_cast<std::size_t>(s.v)];
        int choice = -1;
        for (int w = 0; w < host_n; ++w) {
            if (used[static_cast<std::size_t>(w)] || w == a || w == b) continue;
            if (c.colour(a, b, w) == colour) {
                choice = w;
                break;
            }
        }
        if (choice < 0) {
            result.failed_stage = CfrStage::spike;
            result.blocked_vertex = s.vertex;
            result.detail = "no unused vertex completes the pair in the target colour";
            return result;
        }
        emb.map[static_cast<std::size_t>(s.vertex)] = choice;
        used[static_cast<std::size_t>(choice)] = 1;
    }

    int next_free = 0;
    for (int v : target.padding_vertices()) {
        while (used[static_cast<std::size_t>(next_free)]) ++next_free;
        emb.map[static_cast<std::size_t>(v)] = next_free;
        used[static_cast<std::size_t>(next_free)] = 1;
    }

    if (!verify_embedding(c, target, colour, emb))
        throw std::logic_error("cfr_embed: constructed embedding failed verification");
    result.embedding = std::move(emb);
    return result;
}

namespace {

// Exhaustive copy search. Body images are assigned by backtracking, most
// F-constrained position first; spikes are interchangeable within a pair, so
// their assignment is a bipartite matching instead of further backtracking.
struct ExactSearch {
    const TripleColouring& c;
    const Hedgehog& h;
    Colour colour;
    int host_n;

    struct FEdge {
        int p1, p2;
        int mult;
    };
    std::vector<FEdge> fedges;
    std::vector<std::vector<int>> fedges_at; // body position -> fedge indices
    std::vector<int> order;                  // positions, most constrained first
    std::vector<int> image;                  // per position, -1 unset
    std::vector<char> body_used;

    ExactSearch(const TripleColouring& col, const Hedgehog& hh, Colour target)
        : c(col), h(hh), colour(target), host_n(col.n()) {
        const auto& body = h.body();
        auto pos_of = [&body](int v) {
            return static_cast<int>(std::lower_bound(body.begin(), body.end(), v) - body.begin());
        };
        std::vector<std::vector<int>> mult(body.size(), std::vector<int>(body.size(), 0));
        for (const auto& s : h.spikes()) ++mult[pos_of(s.u)][pos_of(s.v)];
        fedges_at.assign(body.size(), {});
        for (std::size_t a = 0; a < body.size(); ++a)
            for (std::size_t b = a + 1; b < body.size(); ++b)
                if (mult[a][b] > 0) {
                    fedges.push_back({static_cast<int>(a), static_cast<int>(b), mult[a][b]});
                    fedges_at[a].push_back(static_cast<int>(fedges.size()) - 1);
                    fedges_at[b].push_back(static_cast<int>(fedges.size()) - 1);
                }
        order.resize(body.size());
        for (std::size_t i = 0; i < body.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [this](int a, int b) {
            const auto da = fedges_at[a].size(), db = fedges_at[b].size();
            return da != db ? da > db : a < b;
        });
        image.assign(body.size(), -1);
        body_used.assign(static_cast<std::size_t>(host_n), 0);
    }

    bool target_triple(int a, int b, int w) const { return c.colour(a, b, w) == colour; }

    // number of target-coloured completions of {a, b} avoiding body images
    int extensions(int a, int b) const {
        int cnt = 0;
        for (int w = 0; w < host_n; ++w)
            if (w != a && w != b && !body_used[static_cast<std::size_t>(w)] &&
                target_triple(a, b, w))
                ++cnt;
        return cnt;
    }

    bool match_spikes(std::optional<Embedding>& out) {
        const auto& spikes = h.spikes();
        const auto& body = h.body();
        auto pos_of = [&body](int v) {
            return static_cast<int>(std::lower_bound(body.begin(), body.end(), v) - body.begin());
        };
        std::vector<std::vector<int>> cand(spikes.size());
        for (std::size_t s = 0; s < spikes.size(); ++s) {
            const int a = image[static_cast<std::size_t>(pos_of(spikes[s].u))];
            const int b = image[static_cast<std::size_t>(pos_of(spikes[s].v))];
            for (int w = 0; w < host_n; ++w)
                if (!body_used[static_cast<std::size_t>(w)] && w != a && w != b &&
                    target_triple(a, b, w))
                    cand[s].push_back(w);
            if (cand[s].empty()) return false;
        }
        std::vector<int> owner(static_cast<std::size_t>(host_n), -1); // host vertex -> spike idx
        std::vector<int> match(spikes.size(), -1);
        std::vector<char> visited;
        auto augment = [&](auto&& self, int s) -> bool {
            for (int w : cand[static_cast<std::size_t>(s)]) {
                if (visited[static_cast<std::size_t>(w)]) continue;
                visited[static_cast<std::size_t>(w)] = 1;
                if (owner[static_cast<std::size_t>(w)] < 0 ||
                    self(self, owner[static_cast<std::size_t>(w)])) {
                    owner[static_cast<std::size_t>(w)] = s;
                    match[static_cast<std::size_t>(s)] = w;
                    return true;
                }
            }
            return false;
        };
        for (std::size_t s = 0; s < spikes.size(); ++s) {
            visited.assign(static_cast<std::size_t>(host_n), 0);
            if (!augment(augment, static_cast<int>(s))) return false;
        }

        Embedding emb;
        emb.colour = colour;
        emb.map.assign(static_cast<std::size_t>(max_vertex_id(h)) + 1, -1);
        std::vector<char> used = body_used;
        for (std::size_t i = 0; i < body.size(); ++i)
            emb.map[static_cast<std::size_t>(body[i])] = image[i];
        for (std::size_t s = 0; s < spikes.size(); ++s) {
            emb.map[static_cast<std::size_t>(spikes[s].vertex)] = match[s];
            used[static_cast<std::size_t>(match[s])] = 1;
        }
        int next_free = 0;
        for (int v : h.padding_vertices()) {
            while (used[static_cast<std::size_t>(next_free)]) ++next_free;
            emb.map[static_cast<std::size_t>(v)] = next_free;
            used[static_cast<std::size_t>(next_free)] = 1;
        }
        out = std::move(emb);
        return true;
    }

    bool backtrack(std::size_t depth, std::optional<Embedding>& out) {
        if (depth == order.size()) return match_spikes(out);
        const int pos = order[depth];
        for (int u = 0; u < host_n; ++u) {
            if (body_used[static_cast<std::size_t>(u)]) continue;
            image[static_cast<std::size_t>(pos)] = u;
            body_used[static_cast<std::size_t>(u)] = 1;
            bool ok = true;
            for (int fe : fedges_at[static_cast<std::size_t>(pos)]) {
                const auto& e = fedges[static_cast<std::size_t>(fe)];
                const int other = e.p1 == pos ? e.p2 : e.p1;
                const int img = image[static_cast<std::size_t>(other)];
                if (img >= 0 && extensions(u, img) < e.mult) {
                    ok = false;
                    break;
                }
            }
            if (ok && backtrack(depth + 1, out)) return true;
            image[static_cast<std::size_t>(pos)] = -1;
            body_used[static_cast<std::size_t>(u)] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<Embedding> find_mono_copy_exact(const TripleColouring& c, const Hedgehog& h,
                                              Colour colour) {
    if (h.n_total() > c.n()) return std::nullopt;
    ExactSearch search(c, h, colour);
    std::optional<Embedding> out;
    search.backtrack(0, out);
    return out;
}

bool verify_embedding(const TripleColouring& c, const Hedgehog& h, Colour colour,
                      const Embedding& e) {
    const int host_n = c.n();
    std::vector<char> seen(static_cast<std::size_t>(host_n), 0);
    auto place = [&](int v) {
        if (v < 0 || v >= static_cast<int>(e.map.size())) return false;
        const int img = e.map[static_cast<std::size_t>(v)];
        if (img < 0 || img >= host_n || seen[static_cast<std::size_t>(img)]) return false;
        seen[static_cast<std::size_t>(img)] = 1;
        return true;
    };
    for (int v : h.body())
        if (!place(v)) return false;
    for (const auto& s : h.spikes())
        if (!place(s.vertex)) return false;
    for (int v : h.padding_vertices())
        if (!place(v)) return false;
    for (const auto& s : h.spikes()) {
        const int a = e.map[static_cast<std::size_t>(s.u)];
        const int b = e.map[static_cast<std::size_t>(s.v)];
        const int w = e.map[static_cast<std::size_t>(s.vertex)];
        if (c.colour(a, b, w) != colour) return false;
    }
    return true;
}

namespace {

std::vector<std::vector<std::uint32_t>> rank_permutations(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    const std::uint64_t t = n_triples(static_cast<std::uint64_t>(n));
    std::vector<std::vector<std::uint32_t>> tables;
    do {
        std::vector<std::uint32_t> table(t);
        for (std::uint64_t r = 0; r < t; ++r) {
            const auto tri = triple_unrank(r, n);
            int a = perm[static_cast<std::size_t>(tri.i)];
            int b = perm[static_cast<std::size_t>(tri.j)];
            int c = perm[static_cast<std::size_t>(tri.k)];
            if (a > b) std::swap(a, b);
            if (b > c) std::swap(b, c);
            if (a > b) std::swap(a, b);
            table[r] = static_cast<std::uint32_t>(triple_rank(a, b, c));
        }
        tables.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return tables;
}

} // namespace

bool ramsey_arrows(const Hedgehog& h_red, const Hedgehog& h_blue, int n,
                   bool isomorph_reduction) {
    if (n < 1) throw std::invalid_argument("ramsey_arrows: host size must be >= 1");
    if (n > 6) throw std::invalid_argument("ramsey_arrows: host too large for exhaustion");
    const std::uint64_t t = n_triples(static_cast<std::uint64_t>(n));
    const auto tables = isomorph_reduction ? rank_permutations(n)
                                           : std::vector<std::vector<std::uint32_t>>{};
    const std::uint64_t total = 1ull << t;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (isomorph_reduction) {
            bool canonical = true;
            for (const auto& table : tables) {
                std::uint64_t permuted = 0;
                for (std::uint64_t r = 0; r < t; ++r)
                    if ((mask >> r) & 1ull) permuted |= 1ull << table[r];
                if (permuted < mask) {
                    canonical = false;
                    break;
                }
            }
            if (!canonical) continue;
        }
        const auto c = TripleColouring::from_bits(
            n, t == 0 ? std::vector<std::uint64_t>{} : std::vector<std::uint64_t>{mask});
        if (find_mono_copy_exact(c, h_red, Colour::red)) continue;
        if (find_mono_copy_exact(c, h_blue, Colour::blue)) continue;
        return false; // counterexample colouring
    }
    return true;
}

std::optional<int> ramsey_number(const Hedgehog& h_red, const Hedgehog& h_blue, int n_max,
                                 bool isomorph_reduction) {
    for (int n = 1; n <= n_max; ++n)
        if (ramsey_arrows(h_red, h_blue, n, isomorph_reduction)) return n;
    return std::nullopt;
}

} // namespace hhr
