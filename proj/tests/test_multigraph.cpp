#include "fixtures.hpp"
#include "oracles.hpp"

#include "regfactor/errors.hpp"
#include "regfactor/generators.hpp"
#include "regfactor/multigraph.hpp"

#include <doctest.h>

using namespace regfactor;

TEST_CASE("vertex set basics") {
    VertexSet s(70, {1, 5, 69});
    CHECK(s.count() == 3);
    CHECK(s.contains(69));
    CHECK_FALSE(s.contains(2));
    CHECK(s.members() == std::vector<VertexId>{1, 5, 69});
    CHECK(s.min_member() == 1);
    CHECK(s.complement().count() == 67);
    CHECK(VertexSet::all(70).count() == 70);
    CHECK_THROWS_AS(s.insert(70), DomainError);
    VertexSet t(70, {5, 6});
    CHECK((s & t).members() == std::vector<VertexId>{5});
    CHECK((s - t).count() == 2);
    CHECK(s.intersects(t));
    CHECK_THROWS_AS(s |= VertexSet(10), DomainError);
}

TEST_CASE("degree examples") {
    auto k4 = complete_graph(4);
    for (VertexId v = 0; v < 4; ++v)
        CHECK(degree(k4, v) == 3);
    Multigraph loop(1);
    loop.add_edge(0, 0);
    CHECK(degree(loop, 0) == 2);
    auto h = h_rt(2, 1);
    for (VertexId v = 0; v < 3; ++v)
        CHECK(degree(h, v) == 4);
    CHECK_THROWS_AS(degree(k4, 4), DomainError);
}

TEST_CASE("degree sum and induced edges") {
    auto k4 = complete_graph(4);
    CHECK(degree_sum(k4, VertexSet(4)) == 0);
    CHECK(degree_sum(k4, VertexSet(4, {0, 2})) == 6);
    CHECK(induced_edge_count(k4, VertexSet(4)) == 0);
    CHECK(induced_edge_count(k4, VertexSet(4, {0, 1, 3})) == 3);

    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        auto g = oracle::random_multigraph(1 + rng.below(12), rng.below(30), rng);
        auto [s, t] = oracle::random_pair(g.num_vertices(), rng);
        CHECK(induced_edge_count(g, t) == oracle::scan_induced(g, t));
        CHECK(cross_edge_count(g, s, t) == oracle::scan_cross(g, s, t));
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_regular_multigraph(10, 5, seed);
        auto [s, t] = oracle::random_pair(10, rng);
        CHECK(degree_sum(g, t) == 5 * t.count());
    }
}

TEST_CASE("cross edge count") {
    auto k4 = complete_graph(4);
    CHECK(cross_edge_count(k4, VertexSet(4), VertexSet(4, {1})) == 0);
    CHECK(cross_edge_count(k4, VertexSet(4, {0, 1}), VertexSet(4, {2, 3})) == 4);
    CHECK_THROWS_AS(cross_edge_count(k4, VertexSet(4, {0, 1}), VertexSet(4, {1, 2})), DomainError);

    auto f = fixture::figure1();
    CHECK(cross_edge_count(f.graph, f.t_set, f.s_set) == 2);
}

TEST_CASE("d_{G-S}(T) against delete-and-recount") {
    auto k4 = complete_graph(4);
    VertexSet t(4, {0, 1});
    CHECK(reduced_degree_sum(k4, VertexSet(4), t) == degree_sum(k4, t));
    CHECK(reduced_degree_sum(k4, VertexSet(4, {2}), VertexSet(4)) == 0);
    CHECK_THROWS_AS(reduced_degree_sum(k4, t, t), DomainError);

    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        auto g = oracle::random_multigraph(1 + rng.below(14), rng.below(40), rng);
        auto [s, t] = oracle::random_pair(g.num_vertices(), rng);
        REQUIRE(reduced_degree_sum(g, s, t) == oracle::delete_and_recount(g, s, t));
    }
}

TEST_CASE("degree identities on random multigraphs") {
    Rng rng(7);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 1 + rng.below(12);
        auto g = oracle::random_multigraph(n, rng.below(30), rng);
        std::size_t total = 0;
        for (VertexId v = 0; v < n; ++v)
            total += degree(g, v);
        CHECK(total == 2 * g.num_edges());

        auto [b, c] = oracle::random_pair(n, rng);
        VertexSet a = VertexSet::all(n) - b - c;
        CHECK(degree_sum(g, a) ==
              2 * induced_edge_count(g, a) + cross_edge_count(g, a, b) + cross_edge_count(g, a, c));
    }
}

TEST_CASE("components") {
    auto k4 = complete_graph(4);
    CHECK(components(k4, VertexSet(4)).size() == 1);

    Multigraph star(4);
    for (VertexId v = 1; v < 4; ++v)
        star.add_edge(0, v);
    auto comps = components(star, VertexSet(4, {0}));
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].members() == std::vector<VertexId>{1});
    CHECK(comps[2].members() == std::vector<VertexId>{3});

    auto f = fixture::figure1();
    CHECK(components(f.graph, f.s_set | f.t_set).size() == 5);
}

TEST_CASE("components partition V minus exclude") {
    Rng rng(13);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 1 + rng.below(15);
        auto g = oracle::random_multigraph(n, rng.below(20), rng);
        auto [excl, unused] = oracle::random_pair(n, rng);
        auto comps = components(g, excl);
        VertexSet seen(n);
        std::vector<int> label(n, -1);
        for (std::size_t c = 0; c < comps.size(); ++c) {
            CHECK_FALSE(comps[c].intersects(seen));
            seen |= comps[c];
            for (VertexId v : comps[c].members())
                label[v] = static_cast<int>(c);
            if (c)
                CHECK(comps[c - 1].min_member() < comps[c].min_member());
        }
        CHECK(seen == VertexSet::all(n) - excl);
        for (const Edge& e : g.edges())
            if (label[e.u] >= 0 && label[e.v] >= 0)
                CHECK(label[e.u] == label[e.v]);
        std::vector<bool> alive(n);
        for (VertexId v = 0; v < n; ++v)
            alive[v] = !excl.contains(v);
        CHECK(comps.size() == oracle::count_components(g, alive));
    }
}

TEST_CASE("induced subgraph and edge mutation") {
    auto k4 = complete_graph(4);
    CHECK(induced_subgraph(k4, VertexSet(4)).num_vertices() == 0);
    CHECK(same_edge_multiset(induced_subgraph(k4, VertexSet::all(4)), k4));
    std::vector<VertexId> parent;
    auto tri = induced_subgraph(k4, VertexSet(4, {0, 2, 3}), &parent);
    CHECK(tri.num_vertices() == 3);
    CHECK(tri.num_edges() == 3);
    CHECK(tri.regular_degree() == std::optional<std::size_t>(2));
    CHECK(parent == std::vector<VertexId>{0, 2, 3});

    Multigraph g(2);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(1, 1);
    CHECK_FALSE(g.is_simple());
    CHECK(g.degree(1) == 4);
    g.remove_edge(0);
    CHECK(g.num_edges() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.edge(1).is_loop());
    CHECK_THROWS_AS(g.remove_edge(5), DomainError);
    CHECK_THROWS_AS(g.add_edge(0, 9), DomainError);
    VertexId v = g.add_vertex();
    CHECK(v == 2);
    CHECK(g.degree(v) == 0);
}
