#pragma once

#include <array>
#include <vector>

namespace hhr {

using Edge3 = std::array<int, 3>; // sorted, distinct

// 3-uniform hypergraph on [0, n): deduplicated sorted triples plus a
// vertex -> incident edge id index. Immutable after construction.
class Hypergraph3 {
public:
    Hypergraph3() = default;
    // Triples may arrive in any vertex order; they are sorted, validated and
    // deduplicated. Edge ids follow colex rank order.
    Hypergraph3(int n, std::vector<Edge3> edges);

    int n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    const std::vector<Edge3>& edges() const { return edges_; }
    const Edge3& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
    const std::vector<int>& incident_edges(int v) const;
    int degree(int v) const;

    bool operator==(const Hypergraph3& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge3> edges_;
    std::vector<std::vector<int>> incidence_;
};

// Degree of v: the number of edges it is contained in.
int degree3(const Hypergraph3& h, int v);

} // namespace hhr
