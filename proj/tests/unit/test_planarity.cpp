#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "simemb/planarity.hpp"

using namespace simemb;

namespace {

SimpleGraph random_graph(std::mt19937_64& rng, int n, double p) {
    SimpleGraph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

SimpleGraph petersen() {
    SimpleGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

void check_embedding(const SimpleGraph& g) {
    const auto emb = planar_embedding(g);
    CHECK(is_planar_rotation(g, emb.rotation));
    const int v = g.vertex_count();
    const int e = static_cast<int>(g.edges().size());
    CHECK(v - e + emb.face_count() == 1 + oracle::component_count(g));
    for (int x = 0; x < v; ++x) {
        auto r = emb.rotation[x];
        auto nb = g.neighbors(x);
        std::sort(r.begin(), r.end());
        std::sort(nb.begin(), nb.end());
        CHECK(r == nb);
    }
}

}  // namespace

TEST_CASE("Kuratowski graphs are rejected") {
    CHECK_FALSE(is_planar(complete_graph(5)));
    CHECK_FALSE(is_planar(complete_bipartite_graph(3, 3)));
    CHECK_FALSE(is_planar(subdivide_once(complete_bipartite_graph(3, 3))));
    CHECK_FALSE(is_planar(subdivide_once(complete_graph(5))));
    CHECK_FALSE(is_planar(petersen()));
    CHECK_THROWS_AS(planar_embedding(complete_graph(5)), NotPlanar);
}

TEST_CASE("planar families are accepted") {
    CHECK(is_planar(complete_graph(4)));
    CHECK(is_planar(complete_bipartite_graph(2, 7)));
    CHECK(is_planar(grid_graph(5, 6)));
    CHECK(is_planar(cycle_graph(12)));
    CHECK(is_planar(SimpleGraph(0)));
    CHECK(is_planar(SimpleGraph(4)));
    auto k5 = complete_graph(5);
    k5.remove_edge(0, 1);
    CHECK(is_planar(k5));
}

TEST_CASE("left-right test agrees with rotation enumeration on small graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = random_graph(rng, 3 + trial % 4, 0.3 + 0.1 * (trial % 6));
        CHECK(is_planar(g) == oracle::planar_by_rotations(g));
    }
}

TEST_CASE("left-right test agrees with the Kuratowski search") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_graph(rng, 7 + trial % 3, 0.35 + 0.05 * (trial % 5));
        const bool planar = is_planar(g);
        const auto witness = find_kuratowski_subdivision(g);
        CHECK(planar == !witness.has_value());
        if (witness) CHECK(witness->branch.size() == (witness->k5 ? 5u : 6u));
    }
    CHECK_THROWS_AS(find_kuratowski_subdivision(SimpleGraph(13)), TooLarge);
}

TEST_CASE("embeddings satisfy Euler's formula and list every neighbour") {
    std::mt19937_64 rng(23);
    int planar_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = random_graph(rng, 4 + trial % 12, 0.15 + 0.03 * (trial % 7));
        if (!is_planar(g)) continue;
        ++planar_seen;
        check_embedding(g);
    }
    CHECK(planar_seen > 100);
    check_embedding(grid_graph(6, 6));
    check_embedding(complete_graph(4));
}

TEST_CASE("a non-planar rotation system is detected") {
    const auto g = complete_graph(4);
    // Identical cyclic order at every vertex gives too few faces on K4.
    std::vector<std::vector<int>> rot{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    CHECK(trace_faces(rot).size() == static_cast<std::size_t>(oracle::face_count(rot)));
    CHECK(is_planar_rotation(g, rot) == (oracle::face_count(rot) == 4));
}

TEST_CASE("straight-line drawings have no conflicts") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = random_graph(rng, 3 + trial % 25, 0.08 + 0.02 * (trial % 8));
        if (!is_planar(g)) continue;
        const auto d = straight_line_drawing(planar_embedding(g));
        REQUIRE(d.positions.size() == static_cast<std::size_t>(g.vertex_count()));
        CHECK(count_drawing_conflicts(g, d.positions) == 0);
    }
    const auto grid = grid_graph(7, 7);
    const auto d = straight_line_drawing(planar_embedding(grid));
    CHECK(count_drawing_conflicts(grid, d.positions) == 0);
}

TEST_CASE("conflict counter sees crossings") {
    const auto g = complete_graph(4);
    // Square with both diagonals: the diagonals cross.
    std::vector<IPoint> pos{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
    CHECK(count_drawing_conflicts(g, pos) == 1);
    CHECK(segments_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}));
    CHECK_FALSE(segments_intersect({0, 0}, {1, 0}, {0, 1}, {1, 1}));
    CHECK(segments_intersect({0, 0}, {2, 0}, {1, 0}, {1, 5}));
}
