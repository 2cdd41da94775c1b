#include "regfactor/matching.hpp"

#include "regfactor/errors.hpp"

#include <algorithm>
#include <deque>

namespace regfactor {

namespace {

// Edmonds search with blossom shrinking via base labels. `parent` holds the
// tree predecessor of odd vertices, `even` marks outer vertices.
class BlossomSearch {
public:
    BlossomSearch(const std::vector<std::vector<VertexId>>& adj, std::vector<std::int64_t>& mate)
        : adj_(adj), mate_(mate), n_(adj.size()), base_(n_), parent_(n_), even_(n_),
          in_blossom_(n_), on_path_(n_) {}

    /// Grows a forest from `roots`; returns the free endpoint of an augmenting
    /// path (path recoverable through parent_) or -1.
    std::int64_t grow(const std::vector<VertexId>& roots) {
        std::fill(parent_.begin(), parent_.end(), unmatched);
        std::fill(even_.begin(), even_.end(), false);
        for (std::size_t i = 0; i < n_; ++i)
            base_[i] = static_cast<VertexId>(i);
        queue_.clear();
        for (VertexId r : roots) {
            even_[r] = true;
            queue_.push_back(r);
        }
        while (!queue_.empty()) {
            VertexId v = queue_.front();
            queue_.pop_front();
            for (VertexId to : adj_[v]) {
                if (base_[v] == base_[to] || mate_[v] == to)
                    continue;
                const bool to_even = mate_[to] == unmatched ? even_[to]
                                                            : parent_[mate_[to]] != unmatched;
                if (to_even) {
                    shrink(v, to);
                } else if (parent_[to] == unmatched) {
                    parent_[to] = v;
                    if (mate_[to] == unmatched)
                        return to;
                    auto next = static_cast<VertexId>(mate_[to]);
                    even_[next] = true;
                    queue_.push_back(next);
                }
            }
        }
        return unmatched;
    }

    void augment(std::int64_t v) {
        while (v != unmatched) {
            auto pv = parent_[v];
            auto ppv = mate_[pv];
            mate_[v] = pv;
            mate_[pv] = v;
            v = ppv;
        }
    }

    const std::vector<bool>& even() const { return even_; }

private:
    VertexId lowest_common_base(VertexId a, VertexId b) {
        std::fill(on_path_.begin(), on_path_.end(), false);
        for (;;) {
            a = base_[a];
            on_path_[a] = true;
            if (mate_[a] == unmatched)
                break;
            a = static_cast<VertexId>(parent_[mate_[a]]);
        }
        for (;;) {
            b = base_[b];
            if (on_path_[b])
                return b;
            if (mate_[b] == unmatched)
                throw DomainError("two search trees touch: the matching is not maximum");
            b = static_cast<VertexId>(parent_[mate_[b]]);
        }
    }

    void mark_path(VertexId v, VertexId b, VertexId child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = static_cast<VertexId>(mate_[v]);
            v = static_cast<VertexId>(parent_[mate_[v]]);
        }
    }

    void shrink(VertexId v, VertexId to) {
        VertexId b = lowest_common_base(v, to);
        std::fill(in_blossom_.begin(), in_blossom_.end(), false);
        mark_path(v, b, to);
        mark_path(to, b, v);
        for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
                base_[i] = b;
                if (!even_[i]) {
                    even_[i] = true;
                    queue_.push_back(static_cast<VertexId>(i));
                }
            }
        }
    }

    const std::vector<std::vector<VertexId>>& adj_;
    std::vector<std::int64_t>& mate_;
    std::size_t n_;
    std::vector<VertexId> base_;
    std::vector<std::int64_t> parent_;
    std::vector<bool> even_;
    std::vector<bool> in_blossom_;
    std::vector<bool> on_path_;
    std::deque<VertexId> queue_;
};

std::vector<std::vector<VertexId>> simple_neighbours(const Multigraph& h) {
    const std::size_t n = h.num_vertices();
    std::vector<std::vector<VertexId>> adj(n);
    std::vector<std::int64_t> stamp(n, unmatched);
    for (VertexId v = 0; v < n; ++v) {
        // first-occurrence order, parallel duplicates dropped
        for (EdgeId e : h.incident(v)) {
            VertexId w = h.edge(e).other(v);
            if (w != v && stamp[w] != v) {
                stamp[w] = v;
                adj[v].push_back(w);
            }
        }
    }
    return adj;
}

} // namespace

Matching maximum_matching(const Multigraph& h) {
    const std::size_t n = h.num_vertices();
    auto adj = simple_neighbours(h);
    std::vector<std::int64_t> mate(n, unmatched);

    for (VertexId v = 0; v < n; ++v) {
        if (mate[v] != unmatched)
            continue;
        for (VertexId w : adj[v]) {
            if (mate[w] == unmatched) {
                mate[v] = w;
                mate[w] = v;
                break;
            }
        }
    }

    // A vertex with no augmenting path now never gets one later, so one pass
    // over the exposed vertices suffices.
    BlossomSearch search(adj, mate);
    for (VertexId v = 0; v < n; ++v) {
        if (mate[v] != unmatched)
            continue;
        if (auto end = search.grow({v}); end != unmatched)
            search.augment(end);
    }

    Matching m;
    m.mate = std::move(mate);
    std::vector<bool> taken(n, false); // first copy of a parallel class wins
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        const auto& ed = h.edge(e);
        if (ed.u != ed.v && m.mate[ed.u] == ed.v && !taken[ed.u]) {
            taken[ed.u] = taken[ed.v] = true;
            m.edges.push_back(e);
        }
    }
    return m;
}

std::vector<EdgeId> max_matching(const Multigraph& h) { return maximum_matching(h).edges; }

std::vector<GallaiEdmondsClass> gallai_edmonds(const Multigraph& h, const Matching& maximum) {
    const std::size_t n = h.num_vertices();
    auto adj = simple_neighbours(h);
    auto mate = maximum.mate;
    std::vector<VertexId> roots;
    for (VertexId v = 0; v < n; ++v)
        if (mate[v] == unmatched)
            roots.push_back(v);

    std::vector<GallaiEdmondsClass> cls(n, GallaiEdmondsClass::Rest);
    if (roots.empty())
        return cls;
    BlossomSearch search(adj, mate);
    search.grow(roots); // maximality means no augmenting path is found
    const auto& even = search.even();
    for (VertexId v = 0; v < n; ++v)
        if (even[v])
            cls[v] = GallaiEdmondsClass::Deficient;
    for (VertexId v = 0; v < n; ++v) {
        if (cls[v] == GallaiEdmondsClass::Deficient)
            continue;
        for (VertexId w : adj[v])
            if (even[w]) {
                cls[v] = GallaiEdmondsClass::Adjacent;
                break;
            }
    }
    return cls;
}

} // namespace regfactor
