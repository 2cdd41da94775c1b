#pragma once

#include "regfactor/multigraph.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace regfactor {

// Named graphs ---------------------------------------------------------------

Multigraph complete_graph(std::size_t n);
Multigraph cycle_graph(std::size_t n);
Multigraph path_graph(std::size_t n);
Multigraph petersen_graph();
/// Complement of a simple graph; throws DomainError on loops or parallel edges.
Multigraph complement(const Multigraph& g);
/// Vertices of h follow those of g; edges of g come first.
Multigraph disjoint_union(const Multigraph& g, const Multigraph& h);

// Extremal families ------------------------------------------------------------

/// A connected, bridgeless piece that is (2r+1)-regular except at
/// `attachment`, which has degree 2r+1-deficit.
struct DeficiencyComponent {
    Multigraph graph;
    VertexId attachment = 0;
};

/// deficit 1: K_{2r+2} with one edge subdivided and r-1 loops at the
/// subdivision vertex. deficit 3: the same with r-2 loops when r >= 2, and a
/// single bare vertex when r = 1.
DeficiencyComponent deficiency_component(std::size_t r, std::size_t deficit);

struct ExtremalParams {
    std::size_t r = 1;
    std::size_t k = 1;
    std::size_t t_size = 1;
    std::size_t s_size = 0;
    std::size_t blisters = 0;
    std::size_t extra_components = 0;
};

/// Throws DomainError unless 1 <= k, 3k <= 2r+1, |T| > |S|, and |T| - |S| = 1
/// whenever 3k < 2r+1.
void validate(const ExtremalParams& p);

/// Number of cut-edges of every extremal graph for (r,k): 2r+4-3k.
std::size_t extremal_bridge_count(std::size_t r, std::size_t k);

struct ExtremalConstruction {
    Multigraph graph;
    VertexSet r_set;
    VertexSet s_set;
    VertexSet t_set;
};

/// Extremal graph without a 2k-factor: T (vertices 0..|T|-1) and S (next
/// |S| vertices) form the bipartite base with 2r+4-3k pendant deficiency-1
/// components and k(|T|-|S|)-1 deficiency-3 components hanging off T, then
/// `blisters` non-bridge S-T edges are blistered by K_{2r+2} and
/// `extra_components` copies of K_{2r+2} are appended. The seed picks the
/// blistered edges and drives the fallback stub layouts.
/// Throws ConstructionError if no bridge-exact layout is found.
ExtremalConstruction general_extremal(const ExtremalParams& p, std::uint64_t seed = 0);

/// One hub (vertex 0) joined by single edges to 2r+4-3k deficiency-1
/// components and by triple edges to k-1 deficiency-3 components.
Multigraph sylvester_extremal(std::size_t r, std::size_t k);

/// Blisters edge e of g by h: removes e and e_prime, then joins the smaller
/// endpoint of e to the smaller endpoint of e_prime and the larger to the
/// larger. Vertices of h are appended after those of g. Both graphs must be
/// (2r+1)-regular, h bridgeless, and e_prime a loop only when r > 1.
Multigraph blister(const Multigraph& g, EdgeId e, const Multigraph& h, EdgeId e_prime);

struct BswParams {
    std::size_t r = 2;
    std::size_t t = 1;
};

/// Complement of C_{2t+1} + (r-t+1)K_2 on 2r+3 vertices; the deleted cycle
/// is on vertices 0..2t.
Multigraph h_rt(std::size_t r, std::size_t t);

struct BswConstruction {
    Multigraph graph;
    VertexSet hub;                 // the independent set of 2t+1 vertices (ids 0..2t)
    std::vector<VertexSet> copies; // the 2r+1 copies of H_{r,t}
};

/// 2r+1 copies of H_{r,t} plus 2t+1 hub vertices, hub vertex i matched to
/// cycle vertex i of every copy. Simple, (2r+1)-regular, (2t+1)-connected.
BswConstruction bsw_construction(const BswParams& p);
Multigraph bsw_graph(const BswParams& p);

// Random graphs ------------------------------------------------------------------

/// Configuration model on the given degree sequence (even sum). Loops and
/// parallel edges are kept. Deterministic per seed.
Multigraph random_multigraph_with_degrees(const std::vector<std::size_t>& degrees,
                                          std::uint64_t seed);

/// d-regular configuration-model multigraph; n*d must be even.
Multigraph random_regular_multigraph(std::size_t n, std::size_t d, std::uint64_t seed);

/// Same, rejecting disconnected samples (seeds derived from `seed`).
Multigraph random_connected_regular_multigraph(std::size_t n, std::size_t d, std::uint64_t seed);

/// (2r+1)-regular multigraph with exactly `bridge_count` cut-edges: a random
/// tree of bridges between small random bridgeless blobs. Blob sizes are
/// drawn from 1..max_blob.
Multigraph random_bridge_tree(std::size_t r, std::size_t bridge_count, std::uint64_t seed,
                              std::size_t max_blob = 5);

} // namespace regfactor
