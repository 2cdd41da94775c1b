#pragma once

#include "regfactor/multigraph.hpp"

#include <cstdint>
#include <vector>

namespace regfactor {

inline constexpr std::int64_t unmatched = -1;

struct Matching {
    std::vector<EdgeId> edges;        // ascending edge ids
    std::vector<std::int64_t> mate;   // mate[v] or `unmatched`

    std::size_t size() const noexcept { return edges.size(); }
    bool is_perfect() const noexcept { return 2 * edges.size() == mate.size(); }
};

/// Maximum cardinality matching of a general graph (Edmonds' blossom
/// algorithm). Loops are ignored and parallel edges behave as one edge.
/// Vertices are scanned in id order, so the result is deterministic.
Matching maximum_matching(const Multigraph& h);

/// Edge ids of a maximum matching.
std::vector<EdgeId> max_matching(const Multigraph& h);

enum class GallaiEdmondsClass : std::uint8_t {
    Deficient,  // D: missed by some maximum matching
    Adjacent,   // A: neighbours of D outside D
    Rest,       // C: everything else
};

/// Gallai-Edmonds decomposition, given a maximum matching of h.
std::vector<GallaiEdmondsClass> gallai_edmonds(const Multigraph& h, const Matching& maximum);

} // namespace regfactor
