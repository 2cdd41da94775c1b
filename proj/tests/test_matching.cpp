#include "oracles.hpp"

#include "regfactor/generators.hpp"
#include "regfactor/matching.hpp"

#include <doctest.h>

using namespace regfactor;

namespace {

bool valid_matching(const Multigraph& h, const Matching& m) {
    std::vector<int> hits(h.num_vertices(), 0);
    for (EdgeId e : m.edges) {
        const Edge& ed = h.edge(e);
        if (ed.is_loop() || m.mate[ed.u] != ed.v || m.mate[ed.v] != ed.u)
            return false;
        ++hits[ed.u];
        ++hits[ed.v];
    }
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        if (hits[v] > 1 || (hits[v] == 0) != (m.mate[v] == unmatched))
            return false;
    return std::is_sorted(m.edges.begin(), m.edges.end());
}

} // namespace

TEST_CASE("matching examples") {
    CHECK(max_matching(complete_graph(4)).size() == 2);
    CHECK(max_matching(cycle_graph(5)).size() == 2);
    CHECK(max_matching(petersen_graph()).size() == 5);
    CHECK(max_matching(Multigraph(3)).empty());
}

TEST_CASE("matching agrees with exhaustive search") {
    Rng rng(17);
    for (int i = 0; i < 600; ++i) {
        const std::size_t n = 1 + rng.below(10);
        auto h = oracle::random_simple_graph(n, 0.1 + 0.08 * static_cast<double>(rng.below(10)), rng);
        auto m = maximum_matching(h);
        REQUIRE(valid_matching(h, m));
        REQUIRE(m.size() == oracle::brute_matching_size(h));
    }
}

TEST_CASE("matching is deterministic") {
    Rng rng(2);
    auto h = oracle::random_simple_graph(40, 0.1, rng);
    CHECK(max_matching(h) == max_matching(h));
}

TEST_CASE("gallai-edmonds classes") {
    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng.below(9);
        auto h = oracle::random_simple_graph(n, 0.35, rng);
        auto m = maximum_matching(h);
        auto cls = gallai_edmonds(h, m);
        const auto nu = m.size();
        for (VertexId v = 0; v < n; ++v) {
            // v is in D iff deleting it keeps the matching number
            Multigraph without(n);
            for (const Edge& e : h.edges())
                if (e.u != v && e.v != v)
                    without.add_edge(e.u, e.v);
            const bool deficient = oracle::brute_matching_size(without) == nu;
            CHECK(deficient == (cls[v] == GallaiEdmondsClass::Deficient));
        }
        for (VertexId v = 0; v < n; ++v) {
            if (cls[v] != GallaiEdmondsClass::Adjacent)
                continue;
            bool near_d = false;
            for (EdgeId e : h.incident(v))
                near_d |= cls[h.edge(e).other(v)] == GallaiEdmondsClass::Deficient;
            CHECK(near_d);
        }
    }
}
