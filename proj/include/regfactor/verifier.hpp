#pragma once

#include "regfactor/factor.hpp"
#include "regfactor/generators.hpp"
#include "regfactor/multigraph.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace regfactor {

/// Literal verdicts for the six structural conditions of the extremal
/// characterization, evaluated on a partition (R,S,T).
struct ConditionVerdicts {
    bool a = false; // S, T independent, |T| > |S|
    bool b = false; // every bridge joins T to its own component of G[R]
    bool c = false; // S sends edges only to T or to one-S-one-T components of G[R]
    bool d = false; // exactly k(|T|-|S|)-1 components of G[R] with three edges to T
    bool e = false; // the remaining components of G[R] are regular and bridgeless
    bool f = false; // |T| - |S| = 1 when 3k < 2r+1

    bool all() const noexcept { return a && b && c && d && e && f; }
};

/// The five equalities forced by the necessity argument.
struct EqualityLedger {
    bool q1_equals_p = false;
    bool q2_equals_rs = false;      // q2 = ||R,S||
    bool weighted_equals_d = false; // q1 + q2 + 3 q3 = d_{G-S}(T)
    bool s_degree_split = false;    // (2r+1)|S| = ||T,S|| + ||R,S||
    bool size_gap = false;          // |T|-|S| >= 1, = 1 when 3k < 2r+1

    bool all() const noexcept {
        return q1_equals_p && q2_equals_rs && weighted_equals_d && s_degree_split && size_gap;
    }
};

struct PartitionCertificate {
    VertexSet r;
    VertexSet s;
    VertexSet t;
    ConditionVerdicts verdicts;
    EqualityLedger ledger;
    /// Informational only: one-S-one-T components that are not literally a
    /// regular bridgeless graph minus one edge.
    std::vector<std::string> flags;

    bool passes() const noexcept { return verdicts.all(); }
};

struct VerificationReport {
    std::string check;    // main | charzn | bsw | parity
    std::string instance; // human-readable descriptor
    std::size_t r = 0;
    std::size_t k = 0;
    std::size_t p = 0;    // number of bridges
    bool hypothesis_met = false;
    bool factor_found = false;
    std::optional<TutteWitness> witness;
    std::optional<FactorResult> factor;
    std::optional<PartitionCertificate> certificate;
    std::map<std::string, std::int64_t> details;
    std::vector<std::string> notes;
    bool pass = false;
    double millis = 0;
};

/// Throws DomainError unless G is (2r+1)-regular and 1 <= k <= (2r+1)/3.
void require_regular_instance(const Multigraph& g, std::size_t r, std::size_t k);

/// Hypothesis p <= 2r - 3(k-1). When it holds the report passes iff a valid
/// 2k-factor is found; otherwise the report passes with hypothesis_met false.
VerificationReport verify_main_theorem(const Multigraph& g, std::size_t r, std::size_t k,
                                       std::string instance = {});

/// Fills cert.verdicts (and cert.flags). Throws DomainError unless R, S, T
/// partition V(G).
PartitionCertificate check_conditions_a_f(const Multigraph& g, std::size_t r, std::size_t k,
                                          PartitionCertificate cert);

EqualityLedger check_extremal_equalities(const Multigraph& g, std::size_t r, std::size_t k,
                                         const VertexSet& s, const VertexSet& t);
/// Same, with r read off the regular degree of G.
EqualityLedger check_extremal_equalities(const Multigraph& g, std::size_t k, const VertexSet& s,
                                         const VertexSet& t);

/// Certificate with R = V - S - T, conditions and ledger evaluated.
PartitionCertificate make_certificate(const Multigraph& g, std::size_t r, std::size_t k,
                                      const VertexSet& s, const VertexSet& t);

struct PartitionHint {
    VertexSet s;
    VertexSet t;
};

struct CharacterizationOptions {
    std::size_t oracle_cap = 14;     // exhaustive Tutte oracle used up to this size
    std::size_t exhaustive_cap = 10; // brute-force partition search up to this size
    std::size_t max_vertices = 5000;
    /// Pairs tried before the witness-derived ones (e.g. a construction
    /// partition); they are checked like every other candidate.
    std::vector<PartitionHint> hints;
};

/// For G with exactly 2r+4-3k bridges: searches for a partition satisfying
/// all of (a)-(f), starting from maximum-deficiency Tutte witnesses (as
/// found, then shrunk towards R without losing deficiency). Returns
/// nothing if none is found. Throws DomainError on a wrong bridge count and
/// SizeCapError above options.max_vertices.
std::optional<PartitionCertificate> characterization_check(const Multigraph& g, std::size_t r,
                                                           std::size_t k,
                                                           const CharacterizationOptions& options = {});

/// Both directions on one graph: passes iff a certificate is found exactly
/// when no 2k-factor exists.
VerificationReport verify_characterization(const Multigraph& g, std::size_t r, std::size_t k,
                                           std::string instance = {},
                                           const CharacterizationOptions& options = {});

/// Generates general_extremal(p, seed) and checks the bridge count, absence of
/// a 2k-factor, a passing certificate, and the equality ledger plus (a)-(f) on
/// the construction partition.
VerificationReport verify_extremal_instance(const ExtremalParams& p, std::uint64_t seed = 0);

/// Regularity, vertex connectivity >= 2t+1, and a 2k-factor exactly when
/// k(2t+1) <= t(2r+1). Records the per-copy parity bound on factor edges
/// between the hub and each copy of H_{r,t}.
VerificationReport verify_bsw(const BswParams& p, std::size_t k);

/// `trials` random disjoint pairs (S,T) of G; every one must satisfy
/// q(S,T) = d_{G-S}(T) (mod 2) for l = 2k.
VerificationReport parity_audit(const Multigraph& g, std::size_t k, std::size_t trials,
                                std::uint64_t seed);

// Sweep instances, shared by the CLI and the tests. -------------------------------

struct SweepInstance {
    std::string name;
    Multigraph graph;
};

/// Deterministic per (r, k, index, seed): even indices are connected
/// configuration-model samples, odd indices random bridge trees whose bridge
/// count is drawn up to one past the hypothesis bound. At most 14 vertices.
SweepInstance main_sweep_instance(std::size_t r, std::size_t k, std::size_t index,
                                  std::uint64_t seed);

/// Extremal parameter grid for (r,k): |T|-|S| in {1} or {1,2} per condition
/// (f), |S| in 0..2, blisters 0..2 (only with |S| >= 1), extra components 0..1.
std::vector<ExtremalParams> extremal_grid(std::size_t r, std::size_t k);

/// Graph with exactly 2r+4-3k bridges that has a 2k-factor, found by seeded
/// search over random bridge trees; nothing if the search budget runs out.
std::optional<SweepInstance> near_extremal_control(std::size_t r, std::size_t k,
                                                   std::uint64_t seed);

} // namespace regfactor
