#include "regfactor/generators.hpp"

#include "regfactor/connectivity.hpp"
#include "regfactor/errors.hpp"
#include "regfactor/random.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>

namespace regfactor {

namespace {

std::string str(std::size_t x) { return std::to_string(x); }

void require_regular(const Multigraph& g, std::size_t d, const char* who) {
    auto deg = g.regular_degree();
    if (g.num_vertices() == 0 || !deg || *deg != d)
        throw DomainError(std::string(who) + ": graph is not " + str(d) + "-regular");
}

// Copies h into g with vertex offset; returns the offset.
VertexId append_graph(Multigraph& g, const Multigraph& h) {
    VertexId base = g.add_vertices(h.num_vertices());
    for (const Edge& e : h.edges())
        g.add_edge(base + e.u, base + e.v);
    return base;
}

} // namespace

// Named graphs ---------------------------------------------------------------

Multigraph complete_graph(std::size_t n) {
    Multigraph g(n);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

Multigraph cycle_graph(std::size_t n) {
    if (n == 0)
        throw DomainError("cycle_graph needs at least one vertex");
    Multigraph g(n);
    for (VertexId i = 0; i < n; ++i)
        g.add_edge(i, static_cast<VertexId>((i + 1) % n));
    return g;
}

Multigraph path_graph(std::size_t n) {
    Multigraph g(n);
    for (VertexId i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Multigraph petersen_graph() {
    Multigraph g(10);
    for (VertexId i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Multigraph complement(const Multigraph& g) {
    if (!g.is_simple())
        throw DomainError("complement is only defined for simple graphs");
    const std::size_t n = g.num_vertices();
    std::vector<char> adj(n * n, 0);
    for (const Edge& e : g.edges())
        adj[e.u * n + e.v] = adj[e.v * n + e.u] = 1;
    Multigraph c(n);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (!adj[i * n + j])
                c.add_edge(i, j);
    return c;
}

Multigraph disjoint_union(const Multigraph& g, const Multigraph& h) {
    Multigraph u = g;
    append_graph(u, h);
    return u;
}

// Extremal families ------------------------------------------------------------

DeficiencyComponent deficiency_component(std::size_t r, std::size_t deficit) {
    if (r == 0)
        throw DomainError("deficiency_component needs r >= 1");
    if (deficit != 1 && deficit != 3)
        throw DomainError("deficiency must be 1 or 3, got " + str(deficit));
    if (deficit == 3 && r == 1)
        return {Multigraph(1), 0}; // a bare vertex: degree 0 = 2r+1-3

    const std::size_t loops = deficit == 1 ? r - 1 : r - 2;
    const auto big = static_cast<VertexId>(2 * r + 2);
    Multigraph g(big + 1);
    for (VertexId i = 0; i < big; ++i)
        for (VertexId j = i + 1; j < big; ++j)
            if (i != 0 || j != 1)
                g.add_edge(i, j);
    const VertexId w = big;
    g.add_edge(0, w);
    g.add_edge(w, 1);
    for (std::size_t i = 0; i < loops; ++i)
        g.add_edge(w, w);
    return {std::move(g), w};
}

std::size_t extremal_bridge_count(std::size_t r, std::size_t k) {
    if (k == 0 || 3 * k > 2 * r + 1)
        throw DomainError("need 1 <= k <= (2r+1)/3, got r=" + str(r) + " k=" + str(k));
    return 2 * r + 4 - 3 * k;
}

void validate(const ExtremalParams& p) {
    if (p.r == 0)
        throw DomainError("r must be at least 1");
    extremal_bridge_count(p.r, p.k);
    if (p.t_size == 0 || p.t_size <= p.s_size)
        throw DomainError("need |T| > |S| >= 0, got |T|=" + str(p.t_size) +
                          " |S|=" + str(p.s_size));
    if (3 * p.k < 2 * p.r + 1 && p.t_size - p.s_size != 1)
        throw DomainError("|T| - |S| must be 1 when 3k < 2r+1");
}

namespace {

enum class Item { Pendant, SVertex, Triple };

struct Layout {
    std::vector<VertexId> stubs; // T endpoint per stub, consumed in order
    std::vector<Item> items;
};

ExtremalConstruction build_layout(const ExtremalParams& p, const Layout& lay) {
    const std::size_t deg = 2 * p.r + 1;
    const std::size_t nt = p.t_size, ns = p.s_size;
    Multigraph g(nt + ns);
    std::vector<char> role(nt + ns, 0); // 0 = R, 1 = S, 2 = T
    for (std::size_t i = 0; i < nt; ++i)
        role[i] = 2;
    for (std::size_t i = nt; i < nt + ns; ++i)
        role[i] = 1;

    auto pendant = deficiency_component(p.r, 1);
    auto triple = deficiency_component(p.r, 3);

    std::size_t pos = 0;
    std::size_t next_s = 0;
    for (Item it : lay.items) {
        switch (it) {
        case Item::SVertex: {
            auto s = static_cast<VertexId>(nt + next_s++);
            for (std::size_t i = 0; i < deg; ++i)
                g.add_edge(lay.stubs[pos++], s);
            break;
        }
        case Item::Pendant: {
            VertexId base = append_graph(g, pendant.graph);
            g.add_edge(lay.stubs[pos++], base + pendant.attachment);
            break;
        }
        case Item::Triple: {
            VertexId base = append_graph(g, triple.graph);
            for (int i = 0; i < 3; ++i)
                g.add_edge(lay.stubs[pos++], base + triple.attachment);
            break;
        }
        }
    }
    role.resize(g.num_vertices(), 0);

    ExtremalConstruction out{std::move(g), {}, {}, {}};
    const std::size_t n = out.graph.num_vertices();
    out.r_set = VertexSet(n);
    out.s_set = VertexSet(n);
    out.t_set = VertexSet(n);
    for (VertexId v = 0; v < n; ++v)
        (role[v] == 2 ? out.t_set : role[v] == 1 ? out.s_set : out.r_set).insert(v);
    return out;
}

} // namespace

ExtremalConstruction general_extremal(const ExtremalParams& p, std::uint64_t seed) {
    validate(p);
    const std::size_t deg = 2 * p.r + 1;
    const std::size_t bridge_target = extremal_bridge_count(p.r, p.k);
    const std::size_t triples = p.k * (p.t_size - p.s_size) - 1;

    std::vector<Item> pend(bridge_target, Item::Pendant);
    std::vector<Item> svs(p.s_size, Item::SVertex);
    std::vector<Item> trip(triples, Item::Triple);

    std::vector<VertexId> interleaved, blocked;
    for (std::size_t round = 0; round < deg; ++round)
        for (VertexId t = 0; t < p.t_size; ++t)
            interleaved.push_back(t);
    for (VertexId t = 0; t < p.t_size; ++t)
        for (std::size_t round = 0; round < deg; ++round)
            blocked.push_back(t);

    std::vector<Layout> layouts;
    std::array<const std::vector<Item>*, 3> groups{&pend, &svs, &trip};
    std::array<int, 3> order{0, 1, 2};
    for (const auto* stubs : {&interleaved, &blocked}) {
        std::sort(order.begin(), order.end());
        do {
            Layout lay{*stubs, {}};
            for (int gi : order)
                lay.items.insert(lay.items.end(), groups[gi]->begin(), groups[gi]->end());
            layouts.push_back(std::move(lay));
        } while (std::next_permutation(order.begin(), order.end()));
    }

    Rng rng(seed);
    const int random_attempts = 400;
    std::optional<ExtremalConstruction> found;
    for (int attempt = 0; !found && attempt < static_cast<int>(layouts.size()) + random_attempts;
         ++attempt) {
        Layout lay;
        if (attempt < static_cast<int>(layouts.size())) {
            lay = layouts[attempt];
        } else {
            lay.stubs = interleaved;
            rng.shuffle(lay.stubs);
            lay.items = pend;
            lay.items.insert(lay.items.end(), svs.begin(), svs.end());
            lay.items.insert(lay.items.end(), trip.begin(), trip.end());
            rng.shuffle(lay.items);
        }
        auto c = build_layout(p, lay);
        if (bridges(c.graph).size() == bridge_target)
            found = std::move(c);
    }
    if (!found)
        throw ConstructionError("no layout of the S-T base gives exactly " + str(bridge_target) +
                                " cut-edges for r=" + str(p.r) + " k=" + str(p.k) +
                                " |T|=" + str(p.t_size) + " |S|=" + str(p.s_size));

    ExtremalConstruction c = std::move(*found);
    const Multigraph h = complete_graph(2 * p.r + 2);
    for (std::size_t b = 0; b < p.blisters; ++b) {
        auto br = bridges(c.graph);
        std::vector<EdgeId> candidates;
        for (EdgeId e = 0; e < c.graph.num_edges(); ++e) {
            const Edge& ed = c.graph.edge(e);
            bool st = (c.s_set.contains(ed.u) && c.t_set.contains(ed.v)) ||
                      (c.t_set.contains(ed.u) && c.s_set.contains(ed.v));
            if (st && !std::binary_search(br.begin(), br.end(), e))
                candidates.push_back(e);
        }
        if (candidates.empty())
            throw ConstructionError("no non-bridge S-T edge left for blister " + str(b + 1));
        EdgeId e = candidates[rng.below(candidates.size())];
        c.graph = blister(c.graph, e, h, 0);
        const std::size_t n = c.graph.num_vertices();
        VertexSet r_new(n), s_new(n), t_new(n);
        for (VertexId v = 0; v < n; ++v) {
            if (c.s_set.contains(v))
                s_new.insert(v);
            else if (c.t_set.contains(v))
                t_new.insert(v);
            else
                r_new.insert(v);
        }
        c.r_set = r_new;
        c.s_set = s_new;
        c.t_set = t_new;
    }
    for (std::size_t x = 0; x < p.extra_components; ++x)
        append_graph(c.graph, h);
    if (p.extra_components) {
        const std::size_t n = c.graph.num_vertices();
        VertexSet r_new = VertexSet::all(n);
        VertexSet s_new(n), t_new(n);
        for (VertexId v : c.s_set.members())
            s_new.insert(v);
        for (VertexId v : c.t_set.members())
            t_new.insert(v);
        r_new -= s_new;
        r_new -= t_new;
        c.r_set = r_new;
        c.s_set = s_new;
        c.t_set = t_new;
    }
    return c;
}

Multigraph sylvester_extremal(std::size_t r, std::size_t k) {
    ExtremalParams p;
    p.r = r;
    p.k = k;
    p.t_size = 1;
    p.s_size = 0;
    return general_extremal(p).graph;
}

Multigraph blister(const Multigraph& g, EdgeId e, const Multigraph& h, EdgeId e_prime) {
    if (e >= g.num_edges())
        throw DomainError("blister: unknown edge " + str(e) + " of G");
    if (e_prime >= h.num_edges())
        throw DomainError("blister: unknown edge " + str(e_prime) + " of H");
    auto dg = g.regular_degree();
    if (!dg || *dg % 2 == 0)
        throw DomainError("blister: G must be (2r+1)-regular");
    require_regular(h, *dg, "blister");
    if (!bridges(h).empty())
        throw DomainError("blister: H has a cut-edge");
    const Edge& ep = h.edge(e_prime);
    if (ep.is_loop() && *dg == 3)
        throw DomainError("blister: e' may be a loop only when r > 1");

    const Edge& eg = g.edge(e);
    Multigraph out(g.num_vertices());
    for (EdgeId i = 0; i < g.num_edges(); ++i)
        if (i != e)
            out.add_edge(g.edge(i).u, g.edge(i).v);
    VertexId base = out.add_vertices(h.num_vertices());
    for (EdgeId i = 0; i < h.num_edges(); ++i)
        if (i != e_prime)
            out.add_edge(base + h.edge(i).u, base + h.edge(i).v);
    out.add_edge(std::min(eg.u, eg.v), base + std::min(ep.u, ep.v));
    out.add_edge(std::max(eg.u, eg.v), base + std::max(ep.u, ep.v));
    return out;
}

Multigraph h_rt(std::size_t r, std::size_t t) {
    if (t == 0 || t >= r)
        throw DomainError("need 1 <= t < r, got r=" + str(r) + " t=" + str(t));
    Multigraph base(2 * r + 3);
    const auto cyc = static_cast<VertexId>(2 * t + 1);
    for (VertexId i = 0; i < cyc; ++i)
        base.add_edge(i, (i + 1) % cyc);
    for (VertexId v = cyc; v + 1 < 2 * r + 3; v += 2)
        base.add_edge(v, v + 1);
    return complement(base);
}

BswConstruction bsw_construction(const BswParams& p) {
    Multigraph h = h_rt(p.r, p.t);
    const std::size_t hub = 2 * p.t + 1;
    const std::size_t copies = 2 * p.r + 1;
    BswConstruction out;
    out.graph = Multigraph(hub);
    std::vector<VertexId> bases;
    for (std::size_t c = 0; c < copies; ++c) {
        VertexId base = append_graph(out.graph, h);
        bases.push_back(base);
        for (VertexId i = 0; i < hub; ++i)
            out.graph.add_edge(i, base + i);
    }
    const std::size_t n = out.graph.num_vertices();
    out.hub = VertexSet(n);
    for (VertexId i = 0; i < hub; ++i)
        out.hub.insert(i);
    for (VertexId base : bases) {
        VertexSet s(n);
        for (VertexId i = 0; i < h.num_vertices(); ++i)
            s.insert(base + i);
        out.copies.push_back(std::move(s));
    }
    return out;
}

Multigraph bsw_graph(const BswParams& p) { return bsw_construction(p).graph; }

// Random graphs ------------------------------------------------------------------

Multigraph random_multigraph_with_degrees(const std::vector<std::size_t>& degrees,
                                          std::uint64_t seed) {
    std::vector<VertexId> stubs;
    for (VertexId v = 0; v < degrees.size(); ++v)
        stubs.insert(stubs.end(), degrees[v], v);
    if (stubs.size() % 2)
        throw DomainError("degree sum must be even");
    Rng rng(seed);
    rng.shuffle(stubs);
    Multigraph g(degrees.size());
    for (std::size_t i = 0; i < stubs.size(); i += 2)
        g.add_edge(stubs[i], stubs[i + 1]);
    return g;
}

Multigraph random_regular_multigraph(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (n == 0)
        throw DomainError("random_regular_multigraph needs n >= 1");
    if (n * d % 2)
        throw DomainError("n*d must be even, got n=" + str(n) + " d=" + str(d));
    return random_multigraph_with_degrees(std::vector<std::size_t>(n, d), seed);
}

Multigraph random_connected_regular_multigraph(std::size_t n, std::size_t d, std::uint64_t seed) {
    for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
        auto g = random_regular_multigraph(n, d, attempt ? derive_seed(seed, attempt) : seed);
        if (is_connected(g))
            return g;
    }
    throw ConstructionError("no connected " + str(d) + "-regular sample on " + str(n) +
                            " vertices after 1000 attempts");
}

namespace {

// Connected bridgeless blob whose vertex v misses `tree_deg[v]` edges of
// 2r+1; nothing if the sampler gives up.
std::optional<Multigraph> sample_blob(std::size_t deg, const std::vector<std::size_t>& tree_deg,
                                      Rng& rng) {
    std::vector<std::size_t> inner;
    for (auto t : tree_deg)
        inner.push_back(deg - t);
    for (int attempt = 0; attempt < 200; ++attempt) {
        auto g = random_multigraph_with_degrees(inner, rng.next());
        if (is_connected(g) && bridges(g).empty())
            return g;
    }
    return std::nullopt;
}

} // namespace

Multigraph random_bridge_tree(std::size_t r, std::size_t bridge_count, std::uint64_t seed,
                              std::size_t max_blob) {
    if (r == 0)
        throw DomainError("r must be at least 1");
    const std::size_t deg = 2 * r + 1;
    const std::size_t blobs = bridge_count + 1;
    Rng rng(seed);

    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<std::size_t> parent(blobs, 0), tree_deg(blobs, 0);
        for (std::size_t i = 1; i < blobs; ++i) {
            parent[i] = rng.below(i);
            ++tree_deg[i];
            ++tree_deg[parent[i]];
        }

        // Per blob: size and which blob vertex takes each tree edge end.
        std::vector<Multigraph> parts;
        std::vector<std::vector<VertexId>> slot(blobs);
        bool ok = true;
        for (std::size_t b = 0; b < blobs && ok; ++b) {
            const std::size_t j = tree_deg[b];
            std::vector<std::size_t> sizes;
            for (std::size_t m = 1; sizes.empty() || m <= max_blob; ++m) {
                if ((m + j) % 2) // (2r+1)m - j must be even
                    continue;
                if (m == 1 ? j <= deg : m * (deg - 2) >= j)
                    sizes.push_back(m);
            }
            const std::size_t m = sizes[rng.below(sizes.size())];
            const std::size_t cap = m == 1 ? deg : deg - 2;
            std::vector<std::size_t> td(m, 0);
            for (std::size_t e = 0; e < j; ++e) {
                VertexId v;
                do {
                    v = static_cast<VertexId>(rng.below(m));
                } while (td[v] >= cap);
                ++td[v];
                slot[b].push_back(v);
            }
            auto blob = sample_blob(deg, td, rng);
            if (!blob)
                ok = false;
            else
                parts.push_back(std::move(*blob));
        }
        if (!ok)
            continue;

        Multigraph g;
        std::vector<VertexId> base;
        for (const auto& part : parts)
            base.push_back(append_graph(g, part));
        std::vector<std::size_t> used(blobs, 0);
        for (std::size_t i = 1; i < blobs; ++i) {
            const std::size_t q = parent[i];
            g.add_edge(base[q] + slot[q][used[q]++], base[i] + slot[i][used[i]++]);
        }
        return g;
    }
    throw ConstructionError("random_bridge_tree: sampler gave up for r=" + str(r) +
                            " bridges=" + str(bridge_count));
}

} // namespace regfactor
