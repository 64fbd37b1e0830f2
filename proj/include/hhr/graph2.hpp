#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <utility>
#include <vector>

namespace hhr {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

// Simple undirected graph on [0, n) with bitset adjacency rows.
// No self-loops; adjacency kept symmetric.
class Graph2 {
public:
    Graph2() = default;
    explicit Graph2(int n);

    int n() const { return n_; }
    std::uint64_t m() const { return m_; }

    // Inserting an existing edge is a no-op.
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int degree(int v) const;
    int max_degree() const;
    const VertexSet& neighbours(int v) const;

    Graph2 complement() const;

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph2& other) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<int> degree_;
};

} // namespace hhr
