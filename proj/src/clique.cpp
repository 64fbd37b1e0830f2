#include "hhr/clique.hpp"

#include <algorithm>
#include <stdexcept>

namespace hhr {

namespace {

struct CliqueSearch {
    const Graph2& g;
    int target; // 0: maximise fully; >0: stop once a clique of this size is found
    std::vector<int> best;
    std::vector<int> current;
    bool done = false;

    explicit CliqueSearch(const Graph2& graph, int stop_at) : g(graph), target(stop_at) {}

    void take_best() {
        if (current.size() > best.size()) {
            best = current;
            if (target > 0 && static_cast<int>(best.size()) >= target) done = true;
        }
    }

    // Tomita-style expansion: greedy-colour the candidate set, then branch in
    // decreasing colour order so the colour value bounds the clique extension.
    void expand(VertexSet cands) {
        std::vector<std::pair<int, int>> order; // (vertex, colour)
        order.reserve(cands.count());
        VertexSet uncoloured = cands;
        int colour = 0;
        while (uncoloured.any()) {
            ++colour;
            VertexSet cls = uncoloured;
            for (auto v = cls.find_first(); v != VertexSet::npos; v = cls.find_next(v)) {
                order.emplace_back(static_cast<int>(v), colour);
                uncoloured.reset(v);
                cls -= g.neighbours(static_cast<int>(v));
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const auto [v, c] = *it;
            const int needed = target > 0 ? target : static_cast<int>(best.size()) + 1;
            if (static_cast<int>(current.size()) + c < needed) return;
            current.push_back(v);
            VertexSet next = cands & g.neighbours(v);
            if (next.none())
                take_best();
            else
                expand(std::move(next));
            current.pop_back();
            if (done) return;
            cands.reset(v);
        }
    }
};

} // namespace

std::vector<int> max_clique(const Graph2& g, int stop_at) {
    if (g.n() == 0) return {};
    CliqueSearch search(g, stop_at);
    VertexSet all(static_cast<std::size_t>(g.n()));
    all.set();
    search.expand(std::move(all));
    std::sort(search.best.begin(), search.best.end());
    return search.best;
}

std::optional<std::vector<int>> has_clique(const Graph2& g, int q) {
    if (q < 1) throw std::invalid_argument("has_clique: q must be >= 1");
    if (q > g.n()) return std::nullopt;
    auto found = max_clique(g, q);
    if (static_cast<int>(found.size()) < q) return std::nullopt;
    found.resize(static_cast<std::size_t>(q));
    return found;
}

std::optional<std::vector<int>> has_independent_set(const Graph2& g, int s) {
    if (s < 1) throw std::invalid_argument("has_independent_set: s must be >= 1");
    return has_clique(g.complement(), s);
}

int independence_number(const Graph2& g) {
    return static_cast<int>(max_clique(g.complement()).size());
}

} // namespace hhr
