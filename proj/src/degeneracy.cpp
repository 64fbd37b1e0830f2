#include "hhr/degeneracy.hpp"

#include <algorithm>

namespace hhr {

DegeneracyResult degeneracy2(const Graph2& g) {
    const int n = g.n();
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<bool> removed(static_cast<std::size_t>(n), false);

    DegeneracyResult res;
    res.order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[static_cast<std::size_t>(v)] &&
                (pick == -1 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]))
                pick = v;
        res.value = std::max(res.value, deg[static_cast<std::size_t>(pick)]);
        res.order.push_back(pick);
        removed[static_cast<std::size_t>(pick)] = true;
        const auto& nb = g.neighbours(pick);
        for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u))
            if (!removed[u]) --deg[u];
    }
    return res;
}

DegeneracyResult degeneracy3(const Hypergraph3& h) {
    const int n = h.n();
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = h.degree(v);
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    std::vector<bool> edge_alive(h.m(), true);

    DegeneracyResult res;
    res.order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[static_cast<std::size_t>(v)] &&
                (pick == -1 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]))
                pick = v;
        res.value = std::max(res.value, deg[static_cast<std::size_t>(pick)]);
        res.order.push_back(pick);
        removed[static_cast<std::size_t>(pick)] = true;
        for (int id : h.incident_edges(pick)) {
            if (!edge_alive[static_cast<std::size_t>(id)]) continue;
            edge_alive[static_cast<std::size_t>(id)] = false;
            for (int u : h.edge(id))
                if (!removed[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
        }
    }
    return res;
}

} // namespace hhr
