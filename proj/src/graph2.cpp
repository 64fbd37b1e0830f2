#include "hhr/graph2.hpp"

#include <algorithm>
#include <stdexcept>

namespace hhr {

Graph2::Graph2(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph2: negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
    degree_.assign(static_cast<std::size_t>(n), 0);
}

void Graph2::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph2: vertex out of range");
}

void Graph2::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph2: self-loop");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++degree_[u];
    ++degree_[v];
    ++m_;
}

bool Graph2::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && adj_[u].test(v);
}

int Graph2::degree(int v) const {
    check_vertex(v);
    return degree_[v];
}

int Graph2::max_degree() const {
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

const VertexSet& Graph2::neighbours(int v) const {
    check_vertex(v);
    return adj_[v];
}

Graph2 Graph2::complement() const {
    Graph2 g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adj_[u].test(v)) g.add_edge(u, v);
    return g;
}

std::vector<std::pair<int, int>> Graph2::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v))
            out.emplace_back(u, static_cast<int>(v));
    return out;
}

bool Graph2::operator==(const Graph2& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

} // namespace hhr
