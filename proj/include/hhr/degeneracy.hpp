#pragma once

#include "hhr/graph2.hpp"
#include "hhr/hypergraph3.hpp"

#include <vector>

namespace hhr {

// Iterated minimum-degree removal. `order` is the removal order and
// certifies `value`: each vertex has degree <= value in the subgraph induced
// by itself and the later vertices. Ties break towards the smallest id.
struct DegeneracyResult {
    int value = 0;
    std::vector<int> order;
};

DegeneracyResult degeneracy2(const Graph2& g);

// Hypergraph variant over vertex-induced subhypergraphs: an edge survives
// only while all three endpoints survive.
DegeneracyResult degeneracy3(const Hypergraph3& h);

} // namespace hhr
