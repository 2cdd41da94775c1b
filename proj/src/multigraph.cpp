#include "regfactor/multigraph.hpp"

#include "regfactor/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace regfactor {

// VertexSet ------------------------------------------------------------------

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
    : VertexSet(universe) {
    for (VertexId v : members)
        insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const VertexId> members)
    : VertexSet(universe) {
    for (VertexId v : members)
        insert(v);
}

VertexSet VertexSet::all(std::size_t universe) {
    VertexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    s.trim();
    return s;
}

bool VertexSet::contains(VertexId v) const noexcept {
    return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U);
}

void VertexSet::insert(VertexId v) {
    if (v >= universe_)
        throw DomainError("vertex " + std::to_string(v) + " outside set universe of size " +
                          std::to_string(universe_));
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(VertexId v) {
    if (v < universe_)
        words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::size_t VertexSet::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<VertexId> VertexSet::members() const {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i];
        while (w) {
            out.push_back(static_cast<VertexId>(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

VertexId VertexSet::min_member() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i])
            return static_cast<VertexId>(i * 64 + std::countr_zero(words_[i]));
    throw DomainError("min_member of an empty set");
}

void VertexSet::check_universe(const VertexSet& other) const {
    if (other.universe_ != universe_)
        throw DomainError("vertex sets over different universes");
}

bool VertexSet::intersects(const VertexSet& other) const {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

VertexSet VertexSet::complement() const {
    VertexSet c(*this);
    for (auto& w : c.words_)
        w = ~w;
    c.trim();
    return c;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

void VertexSet::trim() noexcept {
    if (universe_ % 64 && !words_.empty())
        words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
}

// Multigraph -----------------------------------------------------------------

Multigraph::Multigraph(std::size_t vertices) : incidence_(vertices), degree_(vertices, 0) {}

VertexId Multigraph::add_vertex() { return add_vertices(1); }

VertexId Multigraph::add_vertices(std::size_t count) {
    auto first = static_cast<VertexId>(incidence_.size());
    incidence_.resize(incidence_.size() + count);
    degree_.resize(incidence_.size(), 0);
    return first;
}

void Multigraph::check_vertex(VertexId v) const {
    if (!has_vertex(v))
        throw DomainError("unknown vertex " + std::to_string(v));
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    incidence_[u].push_back(id);
    degree_[u] += 1;
    if (u != v)
        incidence_[v].push_back(id);
    degree_[v] += 1;
    return id;
}

void Multigraph::remove_edge(EdgeId e) {
    if (e >= edges_.size())
        throw DomainError("unknown edge " + std::to_string(e));
    edges_.erase(edges_.begin() + e);
    rebuild_incidence();
}

void Multigraph::rebuild_incidence() {
    for (auto& list : incidence_)
        list.clear();
    std::fill(degree_.begin(), degree_.end(), 0);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const auto& e = edges_[id];
        incidence_[e.u].push_back(id);
        if (e.u != e.v)
            incidence_[e.v].push_back(id);
        degree_[e.u] += 1;
        degree_[e.v] += 1;
    }
}

const Edge& Multigraph::edge(EdgeId e) const {
    if (e >= edges_.size())
        throw DomainError("unknown edge " + std::to_string(e));
    return edges_[e];
}

std::span<const EdgeId> Multigraph::incident(VertexId v) const {
    check_vertex(v);
    return incidence_[v];
}

std::size_t Multigraph::degree(VertexId v) const {
    check_vertex(v);
    return degree_[v];
}

bool Multigraph::has_loops() const noexcept {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Multigraph::is_simple() const {
    if (has_loops())
        return false;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(edges_.size());
    for (const auto& e : edges_)
        pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

std::optional<std::size_t> Multigraph::regular_degree() const {
    if (degree_.empty())
        return std::nullopt;
    for (auto d : degree_)
        if (d != degree_.front())
            return std::nullopt;
    return degree_.front();
}

std::size_t Multigraph::min_degree() const {
    if (degree_.empty())
        return 0;
    return *std::min_element(degree_.begin(), degree_.end());
}

// Counting primitives --------------------------------------------------------

namespace {

void require_universe(const Multigraph& g, const VertexSet& s) {
    if (s.universe() != g.num_vertices())
        throw DomainError("vertex set universe " + std::to_string(s.universe()) +
                          " does not match graph order " + std::to_string(g.num_vertices()));
}

void require_disjoint(const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b))
        throw DomainError("vertex sets must be disjoint");
}

} // namespace

std::size_t degree(const Multigraph& g, VertexId v) { return g.degree(v); }

std::size_t degree_sum(const Multigraph& g, const VertexSet& t) {
    require_universe(g, t);
    std::size_t sum = 0;
    for (VertexId v : t.members())
        sum += g.degree(v);
    return sum;
}

std::size_t induced_edge_count(const Multigraph& g, const VertexSet& t) {
    require_universe(g, t);
    std::size_t count = 0;
    for (const auto& e : g.edges())
        if (t.contains(e.u) && t.contains(e.v))
            ++count;
    return count;
}

std::size_t cross_edge_count(const Multigraph& g, const VertexSet& a, const VertexSet& b) {
    require_universe(g, a);
    require_universe(g, b);
    require_disjoint(a, b);
    std::size_t count = 0;
    for (const auto& e : g.edges())
        if ((a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u)))
            ++count;
    return count;
}

std::size_t reduced_degree_sum(const Multigraph& g, const VertexSet& s, const VertexSet& t) {
    require_universe(g, s);
    require_universe(g, t);
    require_disjoint(s, t);
    const VertexSet rest = (s | t).complement();
    return cross_edge_count(g, rest, t) + 2 * induced_edge_count(g, t);
}

std::vector<VertexSet> components(const Multigraph& g, const VertexSet& exclude) {
    require_universe(g, exclude);
    const std::size_t n = g.num_vertices();
    std::vector<int> label(n, -1);
    std::vector<VertexSet> out;
    std::vector<VertexId> stack;
    for (VertexId start = 0; start < n; ++start) {
        if (label[start] >= 0 || exclude.contains(start))
            continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back(n);
        label[start] = id;
        stack.assign(1, start);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            out.back().insert(v);
            for (EdgeId e : g.incident(v)) {
                VertexId w = g.edge(e).other(v);
                if (label[w] < 0 && !exclude.contains(w)) {
                    label[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return out;
}

std::vector<VertexSet> components(const Multigraph& g) {
    return components(g, VertexSet(g.num_vertices()));
}

Multigraph induced_subgraph(const Multigraph& g, const VertexSet& keep,
                            std::vector<VertexId>* parent) {
    require_universe(g, keep);
    const auto kept = keep.members();
    std::vector<VertexId> index(g.num_vertices(), 0);
    for (VertexId i = 0; i < kept.size(); ++i)
        index[kept[i]] = i;
    Multigraph sub(kept.size());
    for (const auto& e : g.edges())
        if (keep.contains(e.u) && keep.contains(e.v))
            sub.add_edge(index[e.u], index[e.v]);
    if (parent)
        *parent = kept;
    return sub;
}

bool same_edge_multiset(const Multigraph& a, const Multigraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
        return false;
    auto normalized = [](const Multigraph& g) {
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (const auto& e : g.edges())
            pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        std::sort(pairs.begin(), pairs.end());
        return pairs;
    };
    return normalized(a) == normalized(b);
}

} // namespace regfactor
