#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace regfactor {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Membership set over the vertices 0..universe-1 of one graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<VertexId> members);
    VertexSet(std::size_t universe, std::span<const VertexId> members);

    static VertexSet all(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    bool contains(VertexId v) const noexcept;
    void insert(VertexId v);
    void erase(VertexId v);

    std::size_t count() const noexcept;
    bool empty() const noexcept;
    std::vector<VertexId> members() const;
    VertexId min_member() const; // requires !empty()

    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;
    VertexSet complement() const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void check_universe(const VertexSet& other) const;
    void trim() noexcept;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Unordered endpoint pair; u == v is a loop. Endpoints keep their insertion
/// order so that text round-trips are exact.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    bool is_loop() const noexcept { return u == v; }
    VertexId other(VertexId w) const noexcept { return w == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph with loops and parallel edges. Edge ids are
/// positions in the edge list, so parallel copies are individually
/// addressable. A loop appears once in the incidence list of its vertex and
/// contributes 2 to its degree.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(std::size_t vertices);

    std::size_t num_vertices() const noexcept { return incidence_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    bool has_vertex(VertexId v) const noexcept { return v < incidence_.size(); }

    VertexId add_vertex();
    /// Appends `count` vertices and returns the id of the first one.
    VertexId add_vertices(std::size_t count);
    EdgeId add_edge(VertexId u, VertexId v);
    /// Removes one edge; ids above `e` shift down by one.
    void remove_edge(EdgeId e);

    const Edge& edge(EdgeId e) const;
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const EdgeId> incident(VertexId v) const;
    std::size_t degree(VertexId v) const;

    bool has_loops() const noexcept;
    bool is_simple() const;
    /// Common degree if every vertex has the same degree.
    std::optional<std::size_t> regular_degree() const;
    std::size_t min_degree() const;

    /// Positional equality: same vertex count and identical edge lists.
    friend bool operator==(const Multigraph& a, const Multigraph& b) {
        return a.incidence_.size() == b.incidence_.size() && a.edges_ == b.edges_;
    }

private:
    void check_vertex(VertexId v) const;
    void rebuild_incidence();

    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::vector<std::size_t> degree_;
};

// Counting primitives. All sets must live in the universe of G.

/// d_G(v); loops count twice. Throws DomainError for unknown v.
std::size_t degree(const Multigraph& g, VertexId v);
std::size_t degree_sum(const Multigraph& g, const VertexSet& t);
/// ||T||: edges with both endpoints in T (a loop at a vertex of T counts once).
std::size_t induced_edge_count(const Multigraph& g, const VertexSet& t);
/// ||A,B|| for disjoint A and B; loops never cross.
std::size_t cross_edge_count(const Multigraph& g, const VertexSet& a, const VertexSet& b);
/// d_{G-S}(T) = ||R,T|| + 2||T|| with R = V - S - T.
std::size_t reduced_degree_sum(const Multigraph& g, const VertexSet& s, const VertexSet& t);

/// Connected components of G - exclude, ordered by minimum vertex id.
std::vector<VertexSet> components(const Multigraph& g, const VertexSet& exclude);
std::vector<VertexSet> components(const Multigraph& g);

/// Subgraph induced on `keep`, vertices renumbered in increasing id order.
/// When `parent` is given it receives the original id of every new vertex.
Multigraph induced_subgraph(const Multigraph& g, const VertexSet& keep,
                            std::vector<VertexId>* parent = nullptr);

/// True when both graphs have the same vertex count and the same multiset of
/// unordered endpoint pairs.
bool same_edge_multiset(const Multigraph& a, const Multigraph& b);

} // namespace regfactor
