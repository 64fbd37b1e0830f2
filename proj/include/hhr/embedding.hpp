#pragma once

#include "hhr/colouring.hpp"
#include "hhr/graph2.hpp"
#include "hhr/hedgehog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hhr {

// Scarce-pair graph of a colouring: a pair is in red_pairs when it lies in
// fewer than d_r red triples, in blue_pairs when in fewer than d_b blue
// triples. A pair may be in neither, or (when N-2 < d_r+d_b-1) in both.
struct AuxGraph {
    int n = 0;
    int d_r = 0;
    int d_b = 0;
    Graph2 red_pairs;
    Graph2 blue_pairs;
};

AuxGraph build_aux_graph(const TripleColouring& c, int d_r, int d_b);

struct Lemma4Report {
    bool holds = false;
    int violating_vertex = -1;
    // (red aux-degree, blue aux-degree) per vertex
    std::vector<std::pair<int, int>> aux_degrees;
};

// Dichotomy check: every vertex has red aux-degree <= 2*d_b or blue
// aux-degree <= 2*d_r. Requires N >= d_r + d_b + 1.
Lemma4Report check_lemma4(const TripleColouring& c, int d_r, int d_b);

struct VertexMarking {
    std::vector<Colour> marks;
    Colour majority_colour = Colour::red; // ties go red
    std::vector<int> v1;                  // the majority class
};

// Vertex marked red iff its red aux-degree is at most `threshold`.
VertexMarking mark_vertices(const AuxGraph& aux, int threshold);

// Injective map hedgehog vertex -> host vertex (indexed by vertex id, -1 for
// ids outside the hedgehog) together with the colour it realises.
struct Embedding {
    std::vector<int> map;
    Colour colour = Colour::red;
};

enum class CfrStage { body, spike };

struct CfrResult {
    std::optional<Embedding> embedding;
    CfrStage failed_stage = CfrStage::body;
    int blocked_vertex = -1;
    std::string detail;
    bool success() const { return embedding.has_value(); }
};

// Constructive embedding: build the aux graph at thresholds d_r = d_b = n,
// mark vertices at 2n, and embed into the majority class (red majority
// embeds h_red in red, blue majority h_blue in blue). Body vertices go in an
// order where each has at most D previously placed F-neighbours, avoiding
// target-colour-scarce pairs; spikes then greedily take the smallest unused
// vertex that completes a target-coloured triple. Failure is a legitimate
// outcome below the guaranteed host size N >= 10 n^{3/2}; a hedgehog with
// more than n vertices is an error.
CfrResult cfr_embed(const TripleColouring& c, const Hedgehog& h_red, const Hedgehog& h_blue,
                    int n);

// Exhaustive search for a monochromatic copy: backtracking over body images
// pruned by per-pair extension counts, then spike assignment by bipartite
// matching (spikes on the same pair are interchangeable). Returns nullopt
// iff no copy exists.
std::optional<Embedding> find_mono_copy_exact(const TripleColouring& c, const Hedgehog& h,
                                              Colour colour);

bool verify_embedding(const TripleColouring& c, const Hedgehog& h, Colour colour,
                      const Embedding& e);

// True iff every explicit colouring of the size-n complete 3-graph contains
// a red h_red or a blue h_blue. Enumerates colourings as colex-bit integers;
// with isomorph_reduction only lex-minimal representatives are tested.
// Throws when n > 6 (2^C(n,3) colourings are past exhaustion).
bool ramsey_arrows(const Hedgehog& h_red, const Hedgehog& h_blue, int n,
                   bool isomorph_reduction = false);

// Least n <= n_max with ramsey_arrows true, or nullopt.
std::optional<int> ramsey_number(const Hedgehog& h_red, const Hedgehog& h_blue, int n_max,
                                 bool isomorph_reduction = false);

} // namespace hhr
