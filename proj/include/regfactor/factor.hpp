#pragma once

#include "regfactor/multigraph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace regfactor {

/// Disjoint (S,T) violating the l-factor criterion
///   q(S,T) - d_{G-S}(T) <= l(|S| - |T|),
/// i.e. a certificate that G has no l-factor.
struct TutteWitness {
    VertexSet s;
    VertexSet t;
    std::int64_t q = 0;          // components counted by the parity criterion
    std::int64_t d = 0;          // d_{G-S}(T)
    std::int64_t deficiency = 0; // q - d - l(|S| - |T|), > 0 for a witness
};

/// One component Q of G - S - T.
struct ComponentRecord {
    VertexSet vertices;
    std::size_t edges_to_t = 0; // ||V(Q),T||
    std::size_t edges_to_s = 0; // ||V(Q),S||
    bool t_odd = false;
};

/// Classification of the T-odd components of G - S - T:
///   q1: one edge to T, none to S
///   q2: one edge to T, at least one to S
///   q3: at least three edges to T
/// Components with an even number of edges to T are recorded but unclassified.
struct OddComponentProfile {
    std::size_t q1 = 0;
    std::size_t q2 = 0;
    std::size_t q3 = 0;
    std::vector<ComponentRecord> components;

    std::size_t t_odd_count() const noexcept { return q1 + q2 + q3; }
};

/// Edge sub-multiset in which every vertex has degree exactly `ell`.
struct FactorResult {
    std::vector<EdgeId> edges; // ascending
    std::size_t ell = 0;
};

OddComponentProfile t_odd_profile(const Multigraph& g, const VertexSet& s, const VertexSet& t);

/// Components Q of G - S - T with ||V(Q),T|| + ell*|V(Q)| odd.
std::size_t q_count(const Multigraph& g, std::size_t ell, const VertexSet& s, const VertexSet& t);

/// q(S,T) - d_{G-S}(T) - ell(|S| - |T|); positive iff (S,T) is a witness.
std::int64_t tutte_deficiency(const Multigraph& g, std::size_t ell, const VertexSet& s,
                              const VertexSet& t);

/// Fills every field of a TutteWitness for the given pair (no sign check).
TutteWitness evaluate_pair(const Multigraph& g, std::size_t ell, const VertexSet& s,
                           const VertexSet& t);

struct OracleOptions {
    std::size_t max_vertices = 14;
};

/// Enumerates all 3^n disjoint pairs. Returns the lexicographically first
/// (S sorted, then T sorted) pair of maximum deficiency if that deficiency is
/// positive, otherwise nothing; nothing <=> G has an ell-factor.
/// Throws SizeCapError above `max_vertices` (hard limit 24).
std::optional<TutteWitness> exhaustive_tutte_oracle(const Multigraph& g, std::size_t ell,
                                                    const OracleOptions& options = {});

/// Reduction of ell-factors to perfect matchings. Every vertex v gets one
/// external node per edge end (two for a loop) and d(v) - ell internal nodes
/// joined to all of v's external nodes; each edge of G joins its two
/// external nodes. G has an ell-factor iff the gadget has a perfect matching.
struct FactorGadget {
    Multigraph graph;
    std::vector<std::optional<EdgeId>> original_edge; // per gadget edge
    std::vector<std::vector<VertexId>> external;      // per vertex of G
    std::vector<std::vector<VertexId>> internal;      // per vertex of G
    bool degree_feasible = true; // false when ell exceeds some degree
};

FactorGadget build_factor_gadget(const Multigraph& g, std::size_t ell);

std::optional<FactorResult> find_factor(const Multigraph& g, std::size_t ell);

bool has_2k_factor(const Multigraph& g, std::size_t k);

/// Exact degree check of a candidate factor (loops count twice).
bool is_factor(const Multigraph& g, const FactorResult& f);

/// Number of unmatched gadget nodes in a maximum matching; equals the
/// maximum deficiency over all pairs (S,T), 0 iff an ell-factor exists.
std::size_t factor_deficiency(const Multigraph& g, std::size_t ell);

/// Polynomial witness search: reads a pair (S,T) off the Gallai-Edmonds
/// decomposition of the gadget, falling back to single-vertex moves if its
/// deficiency is below the gadget deficiency. Returns nothing iff G has an
/// ell-factor. When every degree is at least ell the result has maximum
/// deficiency; otherwise it is a local maximum.
std::optional<TutteWitness> find_tutte_witness(const Multigraph& g, std::size_t ell);

} // namespace regfactor
