#include "regfactor/connectivity.hpp"

#include "regfactor/errors.hpp"
#include "regfactor/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace regfactor {

BridgeSet bridges(const Multigraph& g) {
    const std::size_t n = g.num_vertices();
    constexpr auto unvisited = std::numeric_limits<std::size_t>::max();
    constexpr auto no_edge = std::numeric_limits<EdgeId>::max();
    std::vector<std::size_t> order(n, unvisited), low(n, 0);
    BridgeSet out;

    struct Frame {
        VertexId v;
        EdgeId via; // edge used to enter v, so a parallel copy still counts as a back edge
        std::size_t next;
    };
    std::vector<Frame> stack;
    std::size_t clock = 0;
    for (VertexId root = 0; root < n; ++root) {
        if (order[root] != unvisited)
            continue;
        order[root] = low[root] = clock++;
        stack.push_back({root, no_edge, 0});
        while (!stack.empty()) {
            auto& f = stack.back();
            auto inc = g.incident(f.v);
            if (f.next < inc.size()) {
                EdgeId e = inc[f.next++];
                if (e == f.via || g.edge(e).is_loop())
                    continue;
                VertexId w = g.edge(e).other(f.v);
                if (order[w] == unvisited) {
                    order[w] = low[w] = clock++;
                    stack.push_back({w, e, 0});
                } else {
                    low[f.v] = std::min(low[f.v], order[w]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (!stack.empty()) {
                VertexId parent = stack.back().v;
                low[parent] = std::min(low[parent], low[done.v]);
                if (low[done.v] > order[parent])
                    out.push_back(done.via);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected(const Multigraph& g) { return components(g).size() <= 1; }

std::size_t edge_connectivity(const Multigraph& g) {
    const std::size_t n = g.num_vertices();
    if (n < 2)
        throw DomainError("edge connectivity needs at least two vertices");
    if (!is_connected(g))
        return 0;
    FlowNetwork net(n);
    for (const auto& e : g.edges())
        net.add_edge(e.u, e.v, 1);
    auto best = static_cast<std::int64_t>(g.min_degree());
    for (VertexId v = 1; v < n; ++v)
        best = std::min(best, net.max_flow(0, v, best));
    return static_cast<std::size_t>(best);
}

namespace {

std::vector<std::vector<bool>> simple_adjacency(const Multigraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges()) {
        adj[e.u][e.v] = true;
        adj[e.v][e.u] = true;
    }
    return adj;
}

// Vertex v splits into in-node 2v and out-node 2v+1 joined by a unit arc.
FlowNetwork split_network(const Multigraph& g, const std::vector<std::vector<bool>>& adj) {
    const std::size_t n = g.num_vertices();
    const std::int64_t big = static_cast<std::int64_t>(n) + 1;
    FlowNetwork net(2 * n);
    for (std::size_t v = 0; v < n; ++v)
        net.add_arc(2 * v, 2 * v + 1, 1);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && adj[u][v])
                net.add_arc(2 * u + 1, 2 * v, big);
    return net;
}

} // namespace

std::size_t local_vertex_connectivity(const Multigraph& g, VertexId s, VertexId t) {
    if (g.has_loops())
        throw DomainError("vertex connectivity is defined for loopless graphs only");
    if (!g.has_vertex(s) || !g.has_vertex(t) || s == t)
        throw DomainError("local connectivity needs two distinct vertices");
    auto adj = simple_adjacency(g);
    if (adj[s][t])
        throw DomainError("local vertex connectivity of adjacent vertices is undefined");
    auto net = split_network(g, adj);
    return static_cast<std::size_t>(net.max_flow(2 * s + 1, 2 * t));
}

std::size_t vertex_connectivity(const Multigraph& g) {
    const std::size_t n = g.num_vertices();
    if (g.has_loops())
        throw DomainError("vertex connectivity is defined for loopless graphs only");
    if (n < 2)
        throw DomainError("vertex connectivity needs at least two vertices");
    if (!is_connected(g))
        return 0;
    auto adj = simple_adjacency(g);
    auto net = split_network(g, adj);
    std::size_t best = n - 1;
    // Some vertex among the first best+1 lies outside a minimum separator,
    // so sources beyond that point cannot improve the bound.
    for (std::size_t i = 0; i < n && i <= best; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || adj[i][j])
                continue;
            auto f = net.max_flow(2 * i + 1, 2 * j, static_cast<std::int64_t>(best));
            best = std::min(best, static_cast<std::size_t>(f));
        }
    }
    return best;
}

} // namespace regfactor
