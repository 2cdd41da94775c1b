#include "regfactor/factor.hpp"

#include "regfactor/errors.hpp"
#include "regfactor/matching.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace regfactor {

namespace {

void require_pair(const Multigraph& g, const VertexSet& s, const VertexSet& t) {
    if (s.universe() != g.num_vertices() || t.universe() != g.num_vertices())
        throw DomainError("vertex set universe does not match the graph");
    if (s.intersects(t))
        throw DomainError("S and T must be disjoint");
}

struct Labels {
    std::vector<int> of; // component index or -1 for S and T
    std::vector<std::size_t> size;
};

Labels label_rest(const Multigraph& g, const VertexSet& s, const VertexSet& t) {
    const auto comps = components(g, s | t);
    Labels l{std::vector<int>(g.num_vertices(), -1), {}};
    for (std::size_t c = 0; c < comps.size(); ++c) {
        auto members = comps[c].members();
        l.size.push_back(members.size());
        for (VertexId v : members)
            l.of[v] = static_cast<int>(c);
    }
    return l;
}

// Edges from each component of G - S - T into `side`.
std::vector<std::size_t> edges_into(const Multigraph& g, const Labels& l, const VertexSet& side) {
    std::vector<std::size_t> count(l.size.size(), 0);
    for (const auto& e : g.edges()) {
        if (l.of[e.u] >= 0 && side.contains(e.v))
            ++count[static_cast<std::size_t>(l.of[e.u])];
        else if (l.of[e.v] >= 0 && side.contains(e.u))
            ++count[static_cast<std::size_t>(l.of[e.v])];
    }
    return count;
}

} // namespace

OddComponentProfile t_odd_profile(const Multigraph& g, const VertexSet& s, const VertexSet& t) {
    require_pair(g, s, t);
    const auto comps = components(g, s | t);
    const auto labels = label_rest(g, s, t);
    const auto to_t = edges_into(g, labels, t);
    const auto to_s = edges_into(g, labels, s);

    OddComponentProfile p;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        ComponentRecord rec{comps[c], to_t[c], to_s[c], to_t[c] % 2 == 1};
        if (rec.t_odd) {
            if (rec.edges_to_t == 1 && rec.edges_to_s == 0)
                ++p.q1;
            else if (rec.edges_to_t == 1)
                ++p.q2;
            else
                ++p.q3;
        }
        p.components.push_back(std::move(rec));
    }
    return p;
}

std::size_t q_count(const Multigraph& g, std::size_t ell, const VertexSet& s, const VertexSet& t) {
    require_pair(g, s, t);
    const auto labels = label_rest(g, s, t);
    const auto to_t = edges_into(g, labels, t);
    std::size_t q = 0;
    for (std::size_t c = 0; c < to_t.size(); ++c)
        if ((to_t[c] + ell * labels.size[c]) % 2 == 1)
            ++q;
    return q;
}

TutteWitness evaluate_pair(const Multigraph& g, std::size_t ell, const VertexSet& s,
                           const VertexSet& t) {
    TutteWitness w{s, t, 0, 0, 0};
    w.q = static_cast<std::int64_t>(q_count(g, ell, s, t));
    w.d = static_cast<std::int64_t>(reduced_degree_sum(g, s, t));
    const auto l = static_cast<std::int64_t>(ell);
    w.deficiency = w.q - w.d -
                   l * (static_cast<std::int64_t>(s.count()) - static_cast<std::int64_t>(t.count()));
    return w;
}

std::int64_t tutte_deficiency(const Multigraph& g, std::size_t ell, const VertexSet& s,
                              const VertexSet& t) {
    return evaluate_pair(g, ell, s, t).deficiency;
}

// Exhaustive oracle ------------------------------------------------------------

namespace {

constexpr std::size_t oracle_hard_limit = 24;

// Lexicographic order of the sorted member lists of two bitmasks.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    if (a == b)
        return false;
    const int i = std::countr_zero(a ^ b);
    if ((a >> i) & 1U)
        return (b >> i) != 0; // b continues with a larger element, a is smaller
    return (a >> i) == 0;     // a is a proper prefix of b
}

VertexSet mask_to_set(std::size_t n, std::uint32_t mask) {
    VertexSet s(n);
    while (mask) {
        s.insert(static_cast<VertexId>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return s;
}

} // namespace

std::optional<TutteWitness> exhaustive_tutte_oracle(const Multigraph& g, std::size_t ell,
                                                    const OracleOptions& options) {
    const std::size_t n = g.num_vertices();
    if (n > options.max_vertices || n > oracle_hard_limit)
        throw SizeCapError("exhaustive oracle refuses " + std::to_string(n) +
                           " vertices (cap " +
                           std::to_string(std::min(options.max_vertices, oracle_hard_limit)) + ")");
    if (n == 0)
        return std::nullopt;

    std::vector<std::uint32_t> mult(n * n, 0), loops(n, 0), neighbours(n, 0), odd_neighbours(n, 0);
    for (const auto& e : g.edges()) {
        if (e.is_loop()) {
            ++loops[e.u];
            continue;
        }
        ++mult[e.u * n + e.v];
        ++mult[e.v * n + e.u];
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (mult[u * n + v]) {
                neighbours[u] |= 1U << v;
                if (mult[u * n + v] % 2)
                    odd_neighbours[u] |= 1U << v;
            }

    // induced[X] = ||X||, loops included
    const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1;
    std::vector<std::uint32_t> induced(std::size_t{1} << n, 0);
    for (std::uint32_t mask = 1; mask != 0 && mask <= full; ++mask) {
        const int v = std::countr_zero(mask);
        const std::uint32_t rest = mask & (mask - 1);
        std::uint32_t c = induced[rest] + loops[v];
        for (std::uint32_t r = rest & neighbours[v]; r; r &= r - 1)
            c += mult[v * n + static_cast<std::size_t>(std::countr_zero(r))];
        induced[mask] = c;
    }

    const auto l = static_cast<std::int64_t>(ell);
    std::int64_t best = 0;
    bool found = false;
    std::uint32_t best_s = 0, best_t = 0;

    std::vector<std::uint32_t> comp;
    std::vector<std::uint32_t> column;
    std::vector<int> wbits;
    for (std::uint32_t rest = 0;; ++rest) {
        comp.clear();
        for (std::uint32_t left = rest; left;) {
            std::uint32_t c = left & (~left + 1);
            std::uint32_t frontier = c;
            while (frontier) {
                const int u = std::countr_zero(frontier);
                frontier &= frontier - 1;
                const std::uint32_t fresh = neighbours[u] & rest & ~c;
                c |= fresh;
                frontier |= fresh;
            }
            comp.push_back(c);
            left &= ~c;
        }
        std::uint32_t parity = 0; // bit c: component c currently counted by q
        for (std::size_t c = 0; c < comp.size(); ++c)
            if ((l * std::popcount(comp[c])) & 1)
                parity |= 1U << c;

        const std::uint32_t w = full & ~rest;
        wbits.clear();
        column.clear();
        for (std::uint32_t x = w; x; x &= x - 1) {
            const int t = std::countr_zero(x);
            wbits.push_back(t);
            std::uint32_t col = 0;
            for (std::size_t c = 0; c < comp.size(); ++c)
                if (std::popcount(odd_neighbours[t] & comp[c]) & 1)
                    col |= 1U << c;
            column.push_back(col);
        }

        const auto size_w = static_cast<std::int64_t>(wbits.size());
        const std::int64_t induced_rest = induced[rest];
        std::uint32_t tmask = 0;
        std::int64_t tsize = 0;
        const std::uint64_t steps = std::uint64_t{1} << wbits.size();
        for (std::uint64_t i = 0; i < steps; ++i) {
            if (i) {
                const int j = std::countr_zero(i);
                tmask ^= 1U << wbits[j];
                parity ^= column[j];
                tsize += (tmask >> wbits[j]) & 1U ? 1 : -1;
            }
            const std::int64_t q = std::popcount(parity);
            const std::int64_t d = static_cast<std::int64_t>(induced[rest | tmask]) - induced_rest +
                                   induced[tmask];
            const std::int64_t def = q - d - l * (size_w - 2 * tsize);
            if (def <= 0 || def < best)
                continue;
            const std::uint32_t smask = w & ~tmask;
            if (!found || def > best ||
                mask_lex_less(smask, best_s) || (smask == best_s && mask_lex_less(tmask, best_t))) {
                found = true;
                best = def;
                best_s = smask;
                best_t = tmask;
            }
        }
        if (rest == full)
            break;
    }
    if (!found)
        return std::nullopt;
    return evaluate_pair(g, ell, mask_to_set(n, best_s), mask_to_set(n, best_t));
}

// Gadget reduction -------------------------------------------------------------

FactorGadget build_factor_gadget(const Multigraph& g, std::size_t ell) {
    const std::size_t n = g.num_vertices();
    FactorGadget gadget;
    gadget.external.resize(n);
    gadget.internal.resize(n);

    std::vector<VertexId> end_u(g.num_edges()), end_v(g.num_edges());
    std::size_t nodes = 0;
    for (VertexId v = 0; v < n; ++v) {
        for (EdgeId e : g.incident(v)) {
            const auto& ed = g.edge(e);
            if (ed.is_loop()) {
                end_u[e] = static_cast<VertexId>(nodes++);
                end_v[e] = static_cast<VertexId>(nodes++);
                gadget.external[v].push_back(end_u[e]);
                gadget.external[v].push_back(end_v[e]);
            } else {
                auto node = static_cast<VertexId>(nodes++);
                (ed.u == v ? end_u : end_v)[e] = node;
                gadget.external[v].push_back(node);
            }
        }
        const std::size_t d = g.degree(v);
        if (d < ell)
            gadget.degree_feasible = false;
        for (std::size_t i = ell; i < d; ++i)
            gadget.internal[v].push_back(static_cast<VertexId>(nodes++));
    }

    gadget.graph = Multigraph(nodes);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        gadget.graph.add_edge(end_u[e], end_v[e]);
        gadget.original_edge.push_back(e);
    }
    for (VertexId v = 0; v < n; ++v)
        for (VertexId x : gadget.external[v])
            for (VertexId y : gadget.internal[v]) {
                gadget.graph.add_edge(x, y);
                gadget.original_edge.push_back(std::nullopt);
            }
    return gadget;
}

std::optional<FactorResult> find_factor(const Multigraph& g, std::size_t ell) {
    if (ell == 0)
        return FactorResult{{}, 0};
    if ((ell * g.num_vertices()) % 2 == 1)
        return std::nullopt;
    const auto gadget = build_factor_gadget(g, ell);
    if (!gadget.degree_feasible)
        return std::nullopt;
    const auto m = maximum_matching(gadget.graph);
    if (!m.is_perfect())
        return std::nullopt;
    FactorResult f{{}, ell};
    for (EdgeId e : m.edges)
        if (auto orig = gadget.original_edge[e])
            f.edges.push_back(*orig);
    std::sort(f.edges.begin(), f.edges.end());
    return f;
}

bool has_2k_factor(const Multigraph& g, std::size_t k) {
    if (k == 0)
        throw DomainError("k must be at least 1");
    return find_factor(g, 2 * k).has_value();
}

bool is_factor(const Multigraph& g, const FactorResult& f) {
    std::vector<std::size_t> deg(g.num_vertices(), 0);
    std::vector<bool> used(g.num_edges(), false);
    for (EdgeId e : f.edges) {
        if (e >= g.num_edges() || used[e])
            return false;
        used[e] = true;
        const auto& ed = g.edge(e);
        deg[ed.u] += 1;
        deg[ed.v] += 1;
    }
    return std::all_of(deg.begin(), deg.end(), [&](std::size_t d) { return d == f.ell; });
}

std::size_t factor_deficiency(const Multigraph& g, std::size_t ell) {
    const auto gadget = build_factor_gadget(g, ell);
    if (!gadget.degree_feasible)
        throw DomainError("factor deficiency via the gadget needs ell <= min degree");
    const auto m = maximum_matching(gadget.graph);
    return gadget.graph.num_vertices() - 2 * m.size();
}

// Witness search ---------------------------------------------------------------

namespace {

enum class Side : std::uint8_t { Rest, S, T };

TutteWitness evaluate_sides(const Multigraph& g, std::size_t ell, const std::vector<Side>& side) {
    VertexSet s(g.num_vertices()), t(g.num_vertices());
    for (VertexId v = 0; v < side.size(); ++v) {
        if (side[v] == Side::S)
            s.insert(v);
        else if (side[v] == Side::T)
            t.insert(v);
    }
    return evaluate_pair(g, ell, s, t);
}

// First-improvement local search over single-vertex moves.
TutteWitness climb(const Multigraph& g, std::size_t ell, std::vector<Side> side,
                   std::optional<std::int64_t> target) {
    auto current = evaluate_sides(g, ell, side);
    bool improved = true;
    while (improved && (!target || current.deficiency < *target)) {
        improved = false;
        for (VertexId v = 0; v < side.size() && !improved; ++v) {
            const Side keep = side[v];
            for (Side to : {Side::Rest, Side::S, Side::T}) {
                if (to == keep)
                    continue;
                side[v] = to;
                auto candidate = evaluate_sides(g, ell, side);
                if (candidate.deficiency > current.deficiency) {
                    current = std::move(candidate);
                    improved = true;
                    break;
                }
                side[v] = keep;
            }
        }
    }
    return current;
}

// odd(H - B) - |B|
std::int64_t barrier_value(const Multigraph& h, const std::vector<bool>& barrier) {
    const std::size_t n = h.num_vertices();
    std::vector<bool> seen(n, false);
    std::vector<VertexId> stack;
    std::int64_t value = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (barrier[s]) {
            --value;
            continue;
        }
        if (seen[s])
            continue;
        std::size_t size = 0;
        seen[s] = true;
        stack.assign(1, s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            ++size;
            for (EdgeId e : h.incident(v)) {
                VertexId w = h.edge(e).other(v);
                if (!seen[w] && !barrier[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        if (size % 2)
            ++value;
    }
    return value;
}

} // namespace

std::optional<TutteWitness> find_tutte_witness(const Multigraph& g, std::size_t ell) {
    const std::size_t n = g.num_vertices();
    if (ell == 0 || n == 0)
        return std::nullopt;

    const auto gadget = build_factor_gadget(g, ell);
    if (!gadget.degree_feasible) {
        std::vector<Side> side(n, Side::Rest);
        for (VertexId v = 0; v < n; ++v)
            if (g.degree(v) < ell)
                side[v] = Side::T;
        return climb(g, ell, std::move(side), std::nullopt);
    }

    const auto m = maximum_matching(gadget.graph);
    const auto target = static_cast<std::int64_t>(gadget.graph.num_vertices() - 2 * m.size());
    if (target == 0)
        return std::nullopt;

    // A pair (S,T) corresponds to the barrier made of the external nodes of
    // S and the internal nodes of T, with the same value. Start from the
    // Gallai-Edmonds Tutte set and move one vertex at a time to whichever of
    // the three canonical shapes keeps the barrier value highest.
    const auto cls = gallai_edmonds(gadget.graph, m);
    std::vector<bool> barrier(gadget.graph.num_vertices());
    for (std::size_t x = 0; x < barrier.size(); ++x)
        barrier[x] = cls[x] == GallaiEdmondsClass::Adjacent;

    std::vector<Side> side(n, Side::Rest);
    for (VertexId v = 0; v < n; ++v) {
        const auto& ext = gadget.external[v];
        const auto& in = gadget.internal[v];
        auto shape = [&](Side sd) {
            for (VertexId x : ext)
                barrier[x] = sd == Side::S;
            for (VertexId y : in)
                barrier[y] = sd == Side::T;
        };
        std::int64_t best_value = std::numeric_limits<std::int64_t>::min();
        Side best_side = Side::T;
        for (Side sd : {Side::T, Side::S, Side::Rest}) {
            if (sd == Side::Rest && in.empty())
                continue; // same barrier as T
            shape(sd);
            const auto value = barrier_value(gadget.graph, barrier);
            if (value > best_value) {
                best_value = value;
                best_side = sd;
            }
        }
        shape(best_side);
        side[v] = best_side;
    }

    TutteWitness best = climb(g, ell, side, target);
    if (best.deficiency < target) {
        auto other = climb(g, ell, std::vector<Side>(n, Side::Rest), target);
        if (other.deficiency > best.deficiency)
            best = std::move(other);
    }
    if (best.deficiency <= 0)
        return std::nullopt;
    return best;
}

} // namespace regfactor
