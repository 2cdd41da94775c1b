#include "regfactor/verifier.hpp"

#include "regfactor/connectivity.hpp"
#include "regfactor/errors.hpp"
#include "regfactor/random.hpp"

#include <algorithm>
#include <chrono>

namespace regfactor {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string str(std::size_t x) { return std::to_string(x); }

std::int64_t signed_of(std::size_t x) { return static_cast<std::int64_t>(x); }

bool is_regular_bridgeless(const Multigraph& h, std::size_t deg) {
    auto d = h.regular_degree();
    return h.num_vertices() > 0 && d && *d == deg && bridges(h).empty();
}

struct RestComponents {
    std::vector<VertexSet> sets;
    std::vector<int> of; // component of each R vertex, -1 elsewhere
    std::vector<std::size_t> to_s, to_t;
};

RestComponents rest_components(const Multigraph& g, const VertexSet& s, const VertexSet& t) {
    RestComponents rc;
    rc.sets = components(g, s | t);
    rc.of.assign(g.num_vertices(), -1);
    for (std::size_t c = 0; c < rc.sets.size(); ++c)
        for (VertexId v : rc.sets[c].members())
            rc.of[v] = static_cast<int>(c);
    rc.to_s.assign(rc.sets.size(), 0);
    rc.to_t.assign(rc.sets.size(), 0);
    for (const Edge& e : g.edges()) {
        for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            if (rc.of[x] < 0)
                continue;
            if (s.contains(y))
                ++rc.to_s[static_cast<std::size_t>(rc.of[x])];
            else if (t.contains(y))
                ++rc.to_t[static_cast<std::size_t>(rc.of[x])];
        }
    }
    return rc;
}

// Is the component `c` (one edge to S at a, one to T at b) literally a
// (2r+1)-regular bridgeless graph with the edge ab removed?
bool literal_blister(const Multigraph& g, const VertexSet& c, VertexId a, VertexId b,
                     std::size_t deg) {
    std::vector<VertexId> parent;
    Multigraph h = induced_subgraph(g, c, &parent);
    auto local = [&](VertexId v) {
        return static_cast<VertexId>(std::lower_bound(parent.begin(), parent.end(), v) -
                                     parent.begin());
    };
    h.add_edge(local(a), local(b));
    return is_regular_bridgeless(h, deg);
}

PartitionCertificate evaluate_conditions(const Multigraph& g, std::size_t r, std::size_t k,
                                         PartitionCertificate cert, const BridgeSet& br) {
    const std::size_t n = g.num_vertices();
    for (const VertexSet* x : {&cert.r, &cert.s, &cert.t})
        if (x->universe() != n)
            throw DomainError("partition sets must live in the graph's vertex universe");
    if (cert.r.intersects(cert.s) || cert.r.intersects(cert.t) || cert.s.intersects(cert.t) ||
        (cert.r | cert.s | cert.t).count() != n)
        throw DomainError("R, S, T do not partition V(G)");

    const std::size_t deg = 2 * r + 1;
    const auto& s = cert.s;
    const auto& t = cert.t;
    const auto rc = rest_components(g, s, t);
    std::vector<char> referenced(rc.sets.size(), 0);
    auto& v = cert.verdicts;
    cert.flags.clear();

    v.a = induced_edge_count(g, s) == 0 && induced_edge_count(g, t) == 0 && t.count() > s.count();

    v.b = true;
    std::vector<char> bridge_hit(rc.sets.size(), 0);
    for (EdgeId e : br) {
        const Edge& ed = g.edge(e);
        VertexId in_r = t.contains(ed.u) ? ed.v : t.contains(ed.v) ? ed.u : ed.u;
        bool joins_t = t.contains(ed.u) != t.contains(ed.v);
        if (!joins_t || rc.of[in_r] < 0) {
            v.b = false;
            continue;
        }
        auto c = static_cast<std::size_t>(rc.of[in_r]);
        if (bridge_hit[c])
            v.b = false;
        bridge_hit[c] = referenced[c] = 1;
    }

    v.c = true;
    std::vector<char> flagged(rc.sets.size(), 0);
    for (const Edge& e : g.edges()) {
        if (!s.contains(e.u) && !s.contains(e.v))
            continue;
        if (e.is_loop()) {
            v.c = false;
            continue;
        }
        VertexId at_s = s.contains(e.u) ? e.u : e.v;
        VertexId other = e.other(at_s);
        if (t.contains(other))
            continue;
        if (s.contains(other) || rc.of[other] < 0) {
            v.c = false;
            continue;
        }
        auto c = static_cast<std::size_t>(rc.of[other]);
        if (rc.to_s[c] != 1 || rc.to_t[c] != 1) {
            v.c = false;
            continue;
        }
        referenced[c] = 1;
        if (flagged[c])
            continue;
        flagged[c] = 1;
        VertexId toward_t = other;
        for (VertexId x : rc.sets[c].members())
            for (EdgeId id : g.incident(x))
                if (t.contains(g.edge(id).other(x)))
                    toward_t = x;
        if (!literal_blister(g, rc.sets[c], other, toward_t, deg))
            cert.flags.push_back("component containing vertex " + str(rc.sets[c].min_member()) +
                                 " has one edge to S and one to T but is not a regular "
                                 "bridgeless graph minus an edge");
    }

    std::int64_t three = 0;
    for (std::size_t c = 0; c < rc.sets.size(); ++c)
        if (rc.to_t[c] == 3) {
            ++three;
            referenced[c] = 1;
        }
    v.d = three == signed_of(k) * (signed_of(t.count()) - signed_of(s.count())) - 1;

    v.e = true;
    for (std::size_t c = 0; c < rc.sets.size(); ++c) {
        if (referenced[c])
            continue;
        if (!is_regular_bridgeless(induced_subgraph(g, rc.sets[c]), deg))
            v.e = false;
    }

    v.f = 3 * k >= deg || signed_of(t.count()) - signed_of(s.count()) == 1;
    return cert;
}

EqualityLedger evaluate_ledger(const Multigraph& g, std::size_t r, std::size_t k,
                               const VertexSet& s, const VertexSet& t, std::size_t p) {
    const auto prof = t_odd_profile(g, s, t);
    const VertexSet rest = VertexSet::all(g.num_vertices()) - s - t;
    const std::size_t rs = cross_edge_count(g, rest, s);
    const std::size_t ts = cross_edge_count(g, t, s);
    const std::size_t d = reduced_degree_sum(g, s, t);
    const std::int64_t gap = signed_of(t.count()) - signed_of(s.count());

    EqualityLedger l;
    l.q1_equals_p = prof.q1 == p;
    l.q2_equals_rs = prof.q2 == rs;
    l.weighted_equals_d = prof.q1 + prof.q2 + 3 * prof.q3 == d;
    l.s_degree_split = (2 * r + 1) * s.count() == ts + rs;
    l.size_gap = gap >= 1 && (3 * k >= 2 * r + 1 || gap == 1);
    return l;
}

PartitionCertificate certificate_for(const Multigraph& g, std::size_t r, std::size_t k,
                                     const VertexSet& s, const VertexSet& t,
                                     const BridgeSet& br) {
    PartitionCertificate cert;
    cert.r = VertexSet::all(g.num_vertices()) - s - t;
    cert.s = s;
    cert.t = t;
    cert = evaluate_conditions(g, r, k, std::move(cert), br);
    cert.ledger = evaluate_ledger(g, r, k, s, t, br.size());
    return cert;
}

// Moves single vertices of S or T back to R while the deficiency does not
// drop; the result is a smaller pair with the same deficiency.
TutteWitness shrink_witness(const Multigraph& g, std::size_t ell, TutteWitness w) {
    for (bool moved = true; moved;) {
        moved = false;
        for (VertexId v : (w.s | w.t).members()) {
            VertexSet s = w.s, t = w.t;
            s.erase(v);
            t.erase(v);
            auto cand = evaluate_pair(g, ell, s, t);
            if (cand.deficiency >= w.deficiency) {
                w = cand;
                moved = true;
                break;
            }
        }
    }
    return w;
}

std::string params_name(const ExtremalParams& p, std::uint64_t seed) {
    return "extremal r=" + str(p.r) + " k=" + str(p.k) + " T=" + str(p.t_size) +
           " S=" + str(p.s_size) + " blisters=" + str(p.blisters) +
           " extra=" + str(p.extra_components) + " seed=" + std::to_string(seed);
}

} // namespace

void require_regular_instance(const Multigraph& g, std::size_t r, std::size_t k) {
    if (k == 0 || 3 * k > 2 * r + 1)
        throw DomainError("need 1 <= k <= (2r+1)/3, got r=" + str(r) + " k=" + str(k));
    auto d = g.regular_degree();
    if (g.num_vertices() == 0 || !d || *d != 2 * r + 1)
        throw DomainError("graph is not " + str(2 * r + 1) + "-regular");
}

VerificationReport verify_main_theorem(const Multigraph& g, std::size_t r, std::size_t k,
                                       std::string instance) {
    const auto start = Clock::now();
    require_regular_instance(g, r, k);
    VerificationReport rep;
    rep.check = "main";
    rep.instance = std::move(instance);
    rep.r = r;
    rep.k = k;
    rep.p = bridges(g).size();
    rep.hypothesis_met = rep.p + 3 * (k - 1) <= 2 * r;
    rep.details["n"] = signed_of(g.num_vertices());
    rep.details["bridgeBound"] = signed_of(2 * r) - 3 * (signed_of(k) - 1);

    rep.factor = find_factor(g, 2 * k);
    rep.factor_found = rep.factor.has_value();
    if (!rep.factor_found)
        rep.witness = find_tutte_witness(g, 2 * k);
    const bool valid = !rep.factor || is_factor(g, *rep.factor);
    if (!valid)
        rep.notes.push_back("solver returned an invalid factor");
    rep.pass = rep.hypothesis_met ? rep.factor_found && valid : valid;
    rep.millis = since(start);
    return rep;
}

PartitionCertificate check_conditions_a_f(const Multigraph& g, std::size_t r, std::size_t k,
                                          PartitionCertificate cert) {
    return evaluate_conditions(g, r, k, std::move(cert), bridges(g));
}

EqualityLedger check_extremal_equalities(const Multigraph& g, std::size_t r, std::size_t k,
                                         const VertexSet& s, const VertexSet& t) {
    return evaluate_ledger(g, r, k, s, t, bridges(g).size());
}

EqualityLedger check_extremal_equalities(const Multigraph& g, std::size_t k, const VertexSet& s,
                                         const VertexSet& t) {
    auto d = g.regular_degree();
    if (!d || *d % 2 == 0)
        throw DomainError("graph is not regular of odd degree; pass r explicitly");
    return check_extremal_equalities(g, (*d - 1) / 2, k, s, t);
}

PartitionCertificate make_certificate(const Multigraph& g, std::size_t r, std::size_t k,
                                      const VertexSet& s, const VertexSet& t) {
    return certificate_for(g, r, k, s, t, bridges(g));
}

std::optional<PartitionCertificate> characterization_check(const Multigraph& g, std::size_t r,
                                                           std::size_t k,
                                                           const CharacterizationOptions& options) {
    const std::size_t n = g.num_vertices();
    if (n > options.max_vertices)
        throw SizeCapError("characterization_check: " + str(n) + " vertices exceeds cap " +
                           str(options.max_vertices));
    require_regular_instance(g, r, k);
    const auto br = bridges(g);
    const std::size_t target = extremal_bridge_count(r, k);
    if (br.size() != target)
        throw DomainError("characterization needs exactly " + str(target) + " cut-edges, found " +
                          str(br.size()));

    std::vector<PartitionHint> seeds = options.hints;
    auto add_seed = [&](const TutteWitness& w) {
        seeds.push_back({w.s, w.t});
        auto small = shrink_witness(g, 2 * k, w);
        seeds.push_back({small.s, small.t});
    };
    if (auto w = find_tutte_witness(g, 2 * k))
        add_seed(*w);
    if (n <= options.oracle_cap)
        if (auto w = exhaustive_tutte_oracle(g, 2 * k, {options.oracle_cap}))
            add_seed(*w);
    for (const auto& w : seeds) {
        auto cert = certificate_for(g, r, k, w.s, w.t, br);
        if (cert.passes())
            return cert;
    }

    if (n <= options.exhaustive_cap) {
        std::vector<int> side(n, 0); // base-3 counter: 0 = R, 1 = S, 2 = T
        while (true) {
            VertexSet s(n), t(n);
            for (VertexId v = 0; v < n; ++v) {
                if (side[v] == 1)
                    s.insert(v);
                else if (side[v] == 2)
                    t.insert(v);
            }
            if (t.count() > s.count()) {
                auto cert = certificate_for(g, r, k, s, t, br);
                if (cert.passes())
                    return cert;
            }
            std::size_t i = 0;
            while (i < n && side[i] == 2)
                side[i++] = 0;
            if (i == n)
                break;
            ++side[i];
        }
    }
    return std::nullopt;
}

VerificationReport verify_characterization(const Multigraph& g, std::size_t r, std::size_t k,
                                           std::string instance,
                                           const CharacterizationOptions& options) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.check = "charzn";
    rep.instance = std::move(instance);
    rep.r = r;
    rep.k = k;
    rep.p = bridges(g).size();
    rep.hypothesis_met = true;
    rep.certificate = characterization_check(g, r, k, options);
    rep.factor = find_factor(g, 2 * k);
    rep.factor_found = rep.factor.has_value();
    if (!rep.factor_found)
        rep.witness = find_tutte_witness(g, 2 * k);
    const bool valid = !rep.factor || is_factor(g, *rep.factor);
    rep.details["n"] = signed_of(g.num_vertices());
    rep.pass = valid && rep.certificate.has_value() != rep.factor_found;
    rep.millis = since(start);
    return rep;
}

VerificationReport verify_extremal_instance(const ExtremalParams& p, std::uint64_t seed) {
    const auto start = Clock::now();
    auto c = general_extremal(p, seed);
    const auto& g = c.graph;
    const auto br = bridges(g);

    VerificationReport rep;
    rep.check = "charzn";
    rep.instance = params_name(p, seed);
    rep.r = p.r;
    rep.k = p.k;
    rep.p = br.size();
    rep.hypothesis_met = br.size() == extremal_bridge_count(p.r, p.k);
    rep.details["n"] = signed_of(g.num_vertices());

    const bool regular = g.regular_degree() == std::optional<std::size_t>(2 * p.r + 1);
    rep.factor = find_factor(g, 2 * p.k);
    rep.factor_found = rep.factor.has_value();
    if (!rep.factor_found)
        rep.witness = find_tutte_witness(g, 2 * p.k);
    if (rep.hypothesis_met && regular)
        rep.certificate = characterization_check(g, p.r, p.k);

    auto built = certificate_for(g, p.r, p.k, c.s_set, c.t_set, br);
    rep.details["constructionConditions"] = built.passes();
    rep.details["constructionLedger"] = built.ledger.all();
    rep.details["certificateLedger"] = rep.certificate && rep.certificate->ledger.all();
    for (const auto& f : built.flags)
        rep.notes.push_back("construction: " + f);

    if (!regular)
        rep.notes.push_back("output is not regular");
    if (!rep.hypothesis_met)
        rep.notes.push_back("wrong bridge count");
    rep.pass = regular && rep.hypothesis_met && !rep.factor_found && rep.witness &&
               rep.certificate && rep.certificate->passes() && rep.certificate->ledger.all() &&
               built.passes() && built.ledger.all();
    rep.millis = since(start);
    return rep;
}

VerificationReport verify_bsw(const BswParams& p, std::size_t k) {
    const auto start = Clock::now();
    if (k == 0 || 2 * k > 2 * p.r + 1)
        throw DomainError("need 1 <= k and 2k <= 2r+1, got r=" + str(p.r) + " k=" + str(k));
    auto c = bsw_construction(p);
    const auto& g = c.graph;

    VerificationReport rep;
    rep.check = "bsw";
    rep.instance = "bsw r=" + str(p.r) + " t=" + str(p.t) + " k=" + str(k);
    rep.r = p.r;
    rep.k = k;
    rep.p = bridges(g).size();

    const bool regular = g.regular_degree() == std::optional<std::size_t>(2 * p.r + 1);
    const std::size_t kappa = vertex_connectivity(g);
    rep.hypothesis_met = regular && kappa >= 2 * p.t + 1;
    const bool expect_factor = k * (2 * p.t + 1) <= p.t * (2 * p.r + 1);

    rep.details["n"] = signed_of(g.num_vertices());
    rep.details["vertexConnectivity"] = signed_of(kappa);
    rep.details["hubEdgesPerCopy"] = signed_of(2 * p.t + 1);
    rep.details["maxFactorEdgesPerCopy"] = signed_of(2 * p.t); // even cut, odd edge supply
    rep.details["hubDemand"] = signed_of(2 * k * (2 * p.t + 1));
    rep.details["hubSupply"] = signed_of(2 * p.t * (2 * p.r + 1));
    rep.details["expectFactor"] = expect_factor;

    rep.factor = find_factor(g, 2 * k);
    rep.factor_found = rep.factor.has_value();
    bool crossings_ok = true;
    if (rep.factor) {
        crossings_ok = is_factor(g, *rep.factor);
        for (std::size_t i = 0; i < c.copies.size(); ++i) {
            std::size_t cross = 0;
            for (EdgeId e : rep.factor->edges) {
                const Edge& ed = g.edge(e);
                if (c.copies[i].contains(ed.u) != c.copies[i].contains(ed.v))
                    ++cross;
            }
            rep.details["factorEdgesToCopy" + str(i)] = signed_of(cross);
            if (cross % 2 || cross > 2 * p.t)
                crossings_ok = false;
        }
    } else {
        rep.witness = find_tutte_witness(g, 2 * k);
    }
    rep.pass = rep.hypothesis_met && rep.factor_found == expect_factor && crossings_ok;
    rep.millis = since(start);
    return rep;
}

VerificationReport parity_audit(const Multigraph& g, std::size_t k, std::size_t trials,
                                std::uint64_t seed) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.check = "parity";
    rep.k = k;
    rep.p = bridges(g).size();
    rep.hypothesis_met = true;
    const std::size_t n = g.num_vertices();
    Rng rng(seed);
    std::int64_t violations = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        VertexSet s(n), t(n);
        for (VertexId v = 0; v < n; ++v) {
            auto side = rng.below(3);
            if (side == 1)
                s.insert(v);
            else if (side == 2)
                t.insert(v);
        }
        if (q_count(g, 2 * k, s, t) % 2 != reduced_degree_sum(g, s, t) % 2) {
            if (!violations)
                rep.witness = evaluate_pair(g, 2 * k, s, t);
            ++violations;
        }
    }
    rep.details["trials"] = signed_of(trials);
    rep.details["violations"] = violations;
    rep.pass = violations == 0;
    rep.millis = since(start);
    return rep;
}

SweepInstance main_sweep_instance(std::size_t r, std::size_t k, std::size_t index,
                                  std::uint64_t seed) {
    if (k == 0 || 3 * k > 2 * r + 1)
        throw DomainError("need 1 <= k <= (2r+1)/3");
    const std::uint64_t s = derive_seed(seed, index);
    const std::size_t deg = 2 * r + 1;
    Rng rng(s);
    if (index % 2 == 1) {
        const std::size_t bound = 2 * r + 3 - 3 * k; // hypothesis bound + 1
        for (int attempt = 0; attempt < 50; ++attempt) {
            const std::size_t b = rng.below(bound + 1);
            const std::uint64_t sub = rng.next();
            auto g = random_bridge_tree(r, b, sub, 3);
            if (g.num_vertices() <= 14)
                return {"bridge-tree r=" + str(r) + " bridges=" + str(b) +
                            " seed=" + std::to_string(sub),
                        std::move(g)};
        }
    }
    const std::size_t n = 4 + 2 * rng.below(6); // even, 4..14
    const std::uint64_t sub = rng.next();
    return {"config n=" + str(n) + " d=" + str(deg) + " seed=" + std::to_string(sub),
            random_connected_regular_multigraph(n, deg, sub)};
}

std::vector<ExtremalParams> extremal_grid(std::size_t r, std::size_t k) {
    extremal_bridge_count(r, k);
    std::vector<std::size_t> gaps{1};
    if (3 * k == 2 * r + 1)
        gaps.push_back(2);
    std::vector<ExtremalParams> out;
    for (std::size_t gap : gaps)
        for (std::size_t s = 0; s <= 2; ++s)
            for (std::size_t b = 0; b <= (s ? 2u : 0u); ++b)
                for (std::size_t x = 0; x <= 1; ++x)
                    out.push_back({r, k, s + gap, s, b, x});
    return out;
}

std::optional<SweepInstance> near_extremal_control(std::size_t r, std::size_t k,
                                                   std::uint64_t seed) {
    const std::size_t p = extremal_bridge_count(r, k);
    for (std::uint64_t attempt = 0; attempt < 200; ++attempt) {
        const std::uint64_t sub = derive_seed(seed, attempt);
        auto g = random_bridge_tree(r, p, sub, 4);
        if (has_2k_factor(g, k))
            return SweepInstance{"control r=" + str(r) + " bridges=" + str(p) +
                                     " seed=" + std::to_string(sub),
                                 std::move(g)};
    }
    return std::nullopt;
}

} // namespace regfactor
