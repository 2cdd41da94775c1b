#include "fixtures.hpp"
#include "oracles.hpp"

#include "regfactor/connectivity.hpp"
#include "regfactor/errors.hpp"
#include "regfactor/factor.hpp"
#include "regfactor/generators.hpp"

#include <doctest.h>

using namespace regfactor;

namespace {

// Corpus of small graphs: random multigraphs, random regular multigraphs,
// named graphs.
std::vector<Multigraph> small_corpus(std::size_t count, std::uint64_t seed) {
    std::vector<Multigraph> out{complete_graph(4), cycle_graph(5), petersen_graph(),
                                complete_graph(6), h_rt(2, 1)};
    Rng rng(seed);
    while (out.size() < count) {
        const std::size_t n = 1 + rng.below(12);
        if (rng.below(2))
            out.push_back(oracle::random_multigraph(n, rng.below(3 * n + 1), rng));
        else
            out.push_back(random_regular_multigraph(n, (n % 2 ? 2 : 1) * (1 + rng.below(3)),
                                                    rng.next()));
    }
    return out;
}

std::size_t chosen_degree(const Multigraph& g, const FactorResult& f, VertexId v) {
    std::size_t d = 0;
    for (EdgeId e : f.edges) {
        const Edge& ed = g.edge(e);
        if (ed.u == v)
            ++d;
        if (ed.v == v)
            ++d;
    }
    return d;
}

} // namespace

TEST_CASE("t-odd profile") {
    auto k4 = complete_graph(4);
    auto p = t_odd_profile(k4, VertexSet(4), VertexSet(4));
    CHECK(p.q1 + p.q2 + p.q3 == 0);
    CHECK(p.components.size() == 1);

    auto f = fixture::figure1();
    auto prof = t_odd_profile(f.graph, f.s_set, f.t_set);
    CHECK(prof.q1 == 3);
    CHECK(prof.q2 == 1);
    CHECK(prof.q3 == 1);
    CHECK(prof.components.size() == 5);
}

TEST_CASE("q count and deficiency examples") {
    auto k4 = complete_graph(4);
    CHECK(q_count(k4, 2, VertexSet(4), VertexSet(4)) == 0);
    Multigraph two_k2(4);
    two_k2.add_edge(0, 1);
    two_k2.add_edge(2, 3);
    CHECK(q_count(two_k2, 1, VertexSet(4), VertexSet(4)) == 0);
    CHECK(tutte_deficiency(k4, 2, VertexSet(4), VertexSet(4)) == 0);

    auto f = fixture::figure1();
    CHECK(q_count(f.graph, 2, f.s_set, f.t_set) == 5);
    auto w = evaluate_pair(f.graph, 2, f.s_set, f.t_set);
    CHECK(w.q == 5);
    CHECK(w.d == 7);
    CHECK(w.deficiency == 2);
    CHECK(tutte_deficiency(f.graph, 2, f.s_set, f.t_set) == 2);
}

TEST_CASE("definitions agree with an independent recount") {
    Rng rng(31);
    for (int i = 0; i < 500; ++i) {
        auto g = oracle::random_multigraph(1 + rng.below(12), rng.below(30), rng);
        auto [s, t] = oracle::random_pair(g.num_vertices(), rng);
        const std::size_t ell = 1 + rng.below(6);
        REQUIRE(tutte_deficiency(g, ell, s, t) == oracle::deficiency(g, ell, s, t));
    }
}

TEST_CASE("K4 has no violating pair for ell = 2") {
    auto k4 = complete_graph(4);
    // all 3^4 pairs
    for (int code = 0; code < 81; ++code) {
        VertexSet s(4), t(4);
        int x = code;
        for (VertexId v = 0; v < 4; ++v, x /= 3) {
            if (x % 3 == 1)
                s.insert(v);
            if (x % 3 == 2)
                t.insert(v);
        }
        CHECK(tutte_deficiency(k4, 2, s, t) <= 0);
    }
    CHECK_FALSE(exhaustive_tutte_oracle(k4, 2).has_value());
}

TEST_CASE("oracle on the Sylvester graph") {
    auto g = sylvester_extremal(1, 1);
    CHECK_THROWS_AS(exhaustive_tutte_oracle(g, 2), SizeCapError);
    auto w = exhaustive_tutte_oracle(g, 2, {16});
    REQUIRE(w.has_value());
    CHECK(w->s.empty());
    CHECK(w->t.count() == 1);
    CHECK(w->deficiency == 2);
    // the hard limit wins over a larger configured cap
    CHECK_THROWS_AS(exhaustive_tutte_oracle(cycle_graph(25), 2, {30}), SizeCapError);
}

TEST_CASE("oracle returns the lexicographically first maximum pair") {
    Rng rng(41);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = 1 + rng.below(7);
        auto g = oracle::random_multigraph(n, rng.below(2 * n + 2), rng);
        const std::size_t ell = 1 + rng.below(3);
        // brute force in (sorted S, sorted T) order
        std::int64_t best = 0;
        std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> first;
        std::size_t total = 1;
        for (std::size_t v = 0; v < n; ++v)
            total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            VertexSet s(n), t(n);
            std::size_t x = code;
            for (VertexId v = 0; v < n; ++v, x /= 3) {
                if (x % 3 == 1)
                    s.insert(v);
                if (x % 3 == 2)
                    t.insert(v);
            }
            const auto d = oracle::deficiency(g, ell, s, t);
            auto key = std::make_pair(s.members(), t.members());
            if (d > best || (d == best && d > 0 && first && key < *first)) {
                best = d;
                first = key;
            }
        }
        auto w = exhaustive_tutte_oracle(g, ell);
        REQUIRE(w.has_value() == (best > 0));
        if (w) {
            CHECK(w->deficiency == best);
            CHECK(w->s.members() == first->first);
            CHECK(w->t.members() == first->second);
        }
    }
}

TEST_CASE("gadget size") {
    auto k4 = complete_graph(4);
    auto gadget = build_factor_gadget(k4, 2);
    CHECK(gadget.graph.num_vertices() == 16);
    CHECK(gadget.graph.is_simple());

    Multigraph loop(1);
    loop.add_edge(0, 0);
    auto lg = build_factor_gadget(loop, 2);
    CHECK(lg.graph.num_vertices() == 2);
    CHECK(lg.graph.num_edges() == 1);
    auto f = find_factor(loop, 2);
    REQUIRE(f.has_value());
    CHECK(f->edges == std::vector<EdgeId>{0});

    for (std::size_t r = 1; r <= 3; ++r)
        for (std::size_t k = 1; 2 * k <= 2 * r + 1; ++k) {
            auto g = random_regular_multigraph(8, 2 * r + 1, r * 10 + k);
            auto gg = build_factor_gadget(g, 2 * k);
            CHECK(gg.graph.num_vertices() == (2 * r + 1) * 8 + (2 * r + 1 - 2 * k) * 8);
        }

    auto infeasible = build_factor_gadget(path_graph(3), 2);
    CHECK_FALSE(infeasible.degree_feasible);
}

TEST_CASE("find_factor examples") {
    auto k4 = complete_graph(4);
    auto f = find_factor(k4, 2);
    REQUIRE(f.has_value());
    CHECK(f->edges.size() == 4);
    CHECK(is_factor(k4, *f));
    CHECK(has_2k_factor(k4, 1));
    CHECK_THROWS_AS(has_2k_factor(k4, 0), DomainError);

    CHECK_FALSE(find_factor(sylvester_extremal(1, 1), 2).has_value());
    CHECK_FALSE(has_2k_factor(sylvester_extremal(1, 1), 1));
    CHECK_FALSE(find_factor(bsw_graph({2, 1}), 4).has_value());
    CHECK(find_factor(bsw_graph({2, 1}), 2).has_value());
}

TEST_CASE("solver agrees with the oracle and with backtracking") {
    auto corpus = small_corpus(400, 77);
    for (const auto& g : corpus) {
        for (std::size_t ell = 1; ell <= 6; ++ell) {
            auto f = find_factor(g, ell);
            auto w = exhaustive_tutte_oracle(g, ell);
            REQUIRE(f.has_value() != w.has_value());
            if (f)
                REQUIRE(is_factor(g, *f));
            if (g.num_edges() <= 24)
                REQUIRE(f.has_value() == oracle::brute_has_factor(g, ell));
        }
    }
}

TEST_CASE("polynomial witness search reaches the oracle maximum") {
    Rng rng(55);
    int checked = 0;
    for (int i = 0; i < 1500; ++i) {
        const std::size_t n = 1 + rng.below(10);
        auto g = oracle::random_multigraph(n, rng.below(4 * n + 1), rng);
        const std::size_t ell = 1 + rng.below(4);
        auto w = find_tutte_witness(g, ell);
        auto o = exhaustive_tutte_oracle(g, ell);
        REQUIRE(w.has_value() == o.has_value());
        if (!w)
            continue;
        CHECK(w->deficiency == tutte_deficiency(g, ell, w->s, w->t));
        CHECK(w->deficiency > 0);
        if (g.min_degree() >= ell) {
            ++checked;
            REQUIRE(w->deficiency == o->deficiency);
            CHECK(factor_deficiency(g, ell) == static_cast<std::size_t>(o->deficiency));
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("factor validity and even cuts") {
    Rng rng(61);
    for (int i = 0; i < 80; ++i) {
        const std::size_t r = 1 + rng.below(3);
        const std::size_t k = 1 + rng.below(r);
        auto g = random_connected_regular_multigraph(2 * (2 + rng.below(8)), 2 * r + 1, rng.next());
        auto f = find_factor(g, 2 * k);
        if (!f)
            continue;
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            REQUIRE(chosen_degree(g, *f, v) == 2 * k);
        for (int cut = 0; cut < 50; ++cut) {
            std::size_t crossing = 0;
            std::vector<bool> side(g.num_vertices());
            for (auto&& x : side)
                x = rng.below(2);
            for (EdgeId e : f->edges)
                crossing += side[g.edge(e).u] != side[g.edge(e).v];
            CHECK(crossing % 2 == 0);
        }
    }
}

TEST_CASE("parity and section inequalities") {
    Rng rng(71);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t r = 1 + rng.below(2);
        auto g = random_regular_multigraph(2 * (1 + rng.below(6)), 2 * r + 1, rng.next());
        auto [s, t] = oracle::random_pair(g.num_vertices(), rng);
        const std::size_t k = 1 + rng.below(r);
        const auto d = reduced_degree_sum(g, s, t);
        REQUIRE(q_count(g, 2 * k, s, t) % 2 == d % 2);

        auto prof = t_odd_profile(g, s, t);
        const VertexSet rest = VertexSet::all(g.num_vertices()) - s - t;
        CHECK(prof.t_odd_count() == q_count(g, 2 * k, s, t));
        CHECK(prof.q1 <= bridges(g).size());
        CHECK(prof.q2 <= cross_edge_count(g, rest, s));
        CHECK(prof.q1 + prof.q2 + 3 * prof.q3 <= d);
    }
}
