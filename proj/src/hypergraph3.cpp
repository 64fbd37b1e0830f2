#include "hhr/hypergraph3.hpp"

#include "hhr/combinadic.hpp"

#include <algorithm>
#include <stdexcept>

namespace hhr {

Hypergraph3::Hypergraph3(int n, std::vector<Edge3> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("Hypergraph3: negative vertex count");
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        if (e[0] < 0 || e[2] >= n_) throw std::out_of_range("Hypergraph3: vertex out of range");
        if (e[0] == e[1] || e[1] == e[2])
            throw std::invalid_argument("Hypergraph3: edge with repeated vertex");
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge3& a, const Edge3& b) {
        return triple_rank(a[0], a[1], a[2]) < triple_rank(b[0], b[1], b[2]);
    });
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    incidence_.assign(static_cast<std::size_t>(n_), {});
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id)
        for (int v : edges_[static_cast<std::size_t>(id)])
            incidence_[static_cast<std::size_t>(v)].push_back(id);
}

const std::vector<int>& Hypergraph3::incident_edges(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Hypergraph3: vertex out of range");
    return incidence_[static_cast<std::size_t>(v)];
}

int Hypergraph3::degree(int v) const {
    return static_cast<int>(incident_edges(v).size());
}

int degree3(const Hypergraph3& h, int v) { return h.degree(v); }

} // namespace hhr
