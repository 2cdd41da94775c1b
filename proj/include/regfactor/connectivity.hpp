#pragma once

#include "regfactor/multigraph.hpp"

#include <cstddef>
#include <vector>

namespace regfactor {

/// Ids of all cut-edges, ascending. Loops and edges with a parallel copy are
/// never bridges.
using BridgeSet = std::vector<EdgeId>;

BridgeSet bridges(const Multigraph& g);

/// The empty graph counts as connected.
bool is_connected(const Multigraph& g);

/// Minimum number of edges whose removal disconnects G (parallel edges are
/// counted with multiplicity). Requires at least two vertices.
std::size_t edge_connectivity(const Multigraph& g);

/// Minimum vertex cut, computed on the underlying simple graph (parallel
/// edges collapsed). K_n gives n-1. Throws DomainError on loops or fewer than
/// two vertices.
std::size_t vertex_connectivity(const Multigraph& g);

/// Maximum number of internally vertex-disjoint s-t paths for non-adjacent
/// s and t in the underlying simple graph.
std::size_t local_vertex_connectivity(const Multigraph& g, VertexId s, VertexId t);

} // namespace regfactor
