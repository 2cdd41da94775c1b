#pragma once

#include "regfactor/multigraph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace regfactor {

/// "mgf v1": a header line `mgf <n> <m>` followed by m lines `<u> <v>`,
/// 0-indexed, u == v for a loop. Writing then reading is the identity on
/// the edge list (endpoint order included).
std::string write_mgf(const Multigraph& g);
Multigraph read_mgf(std::istream& in);
Multigraph parse_mgf(std::string_view text);

/// graph6 for simple graphs. Throws DomainError on loops or parallel edges.
std::string write_graph6(const Multigraph& g);
/// Accepts an optional ">>graph6<<" header and surrounding whitespace.
Multigraph parse_graph6(std::string_view text);

/// Undirected DOT; parallel edges and loops are emitted once per copy.
std::string write_dot(const Multigraph& g, std::string_view name = "G");

/// Reads mgf when the first token is "mgf", graph6 otherwise.
Multigraph parse_graph_auto(std::string_view text);
Multigraph load_graph_file(const std::string& path);

} // namespace regfactor
