#pragma once

#include "hhr/colouring.hpp"
#include "hhr/graph2.hpp"
#include "hhr/hedgehog.hpp"
#include "hhr/hypergraph3.hpp"

#include <iosfwd>
#include <string>

namespace hhr {

// Text formats, whitespace separated, '#' starts a comment that runs to the
// end of the line:
//   graph file:     "graph <n> <m>" then m lines "u v" (0-based, u < v)
//   hypergraph:     "h3 <n> <m>" then m lines "u v w" (strictly increasing)
//   hedgehog:       "hedgehog <b> <s> <n_total>" then s lines "u v", the body
//                   pair of spike i; body ids are 0..b-1, spike ids b..b+s-1,
//                   padding implied by n_total
//   colouring:      "color3 <N> explicit" + one hex line of ceil(C(N,3)/8)
//                   bytes (bit at colex rank, red = 1, bytes little-endian),
//                   or "color3 <N> derived <graph-file-path>"

Graph2 read_graph2(std::istream& in);
void write_graph2(std::ostream& out, const Graph2& g);

Hypergraph3 read_hypergraph3(std::istream& in);
void write_hypergraph3(std::ostream& out, const Hypergraph3& h);

Hedgehog read_hedgehog(std::istream& in);
// Requires canonical ids (body 0..b-1, spikes b..b+s-1) as produced by the
// builders.
void write_hedgehog(std::ostream& out, const Hedgehog& h);

// graph_path is stored verbatim in derived-form files and must be non-empty
// for them; explicit colourings ignore it.
void write_colouring(std::ostream& out, const TripleColouring& c,
                     const std::string& graph_path = "");

// Reads either form; a derived file's graph reference is resolved relative
// to the colour file's directory when not absolute.
TripleColouring read_colouring_file(const std::string& path);

Graph2 read_graph2_file(const std::string& path);
Hypergraph3 read_hypergraph3_file(const std::string& path);
Hedgehog read_hedgehog_file(const std::string& path);

} // namespace hhr
