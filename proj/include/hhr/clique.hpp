#pragma once

#include "hhr/graph2.hpp"

#include <optional>
#include <vector>

namespace hhr {

// Exact maximum clique, branch and bound with a greedy colouring bound.
// If stop_at > 0 the search returns as soon as a clique of that size is
// found (the result may then be smaller than the true maximum when no such
// clique exists, but is still a valid clique). Result sorted ascending.
std::vector<int> max_clique(const Graph2& g, int stop_at = 0);

// K_q witness, or nullopt when none exists. Exact. q >= 1.
std::optional<std::vector<int>> has_clique(const Graph2& g, int q);

// Independent set of size s via has_clique on the complement. Exact. s >= 1.
std::optional<std::vector<int>> has_independent_set(const Graph2& g, int s);

// Exact independence number.
int independence_number(const Graph2& g);

} // namespace hhr
