#include <doctest.h>

#include "oracles.hpp"
#include "simemb/graph.hpp"

using namespace simemb;

TEST_CASE("simple graph rejects loops and duplicates") {
    SimpleGraph g(3);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK_THROWS_AS(g.add_edge(2, 2), Error);
    CHECK_THROWS_AS(g.add_edge(0, 7), Error);
    CHECK(g.has_edge(1, 0));
    CHECK(g.degree(0) == 1);
    CHECK(g.remove_edge(0, 1));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.label(2) == "2");
}

TEST_CASE("standard families have the expected sizes") {
    CHECK(complete_graph(6).edges().size() == 15);
    CHECK(complete_bipartite_graph(3, 4).edges().size() == 12);
    // rows*(cols-1) + cols*(rows-1)
    CHECK(grid_graph(4, 7).edges().size() == 4 * 6 + 7 * 3);
    CHECK(cycle_graph(9).edges().size() == 9);
    CHECK(path_graph(9).edges().size() == 8);
    const auto s = subdivide_once(complete_graph(5));
    CHECK(s.vertex_count() == 15);
    CHECK(s.edges().size() == 20);
}

TEST_CASE("components and forests") {
    SimpleGraph g(6);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    const auto [comp, count] = connected_components(g);
    CHECK(count == 3);
    CHECK(count == oracle::component_count(g));
    CHECK(comp[2] == comp[4]);
    CHECK(comp[0] != comp[5]);
    CHECK(is_forest(g));
    CHECK_FALSE(is_connected(g));
    g.add_edge(2, 4);
    CHECK_FALSE(is_forest(g));
    CHECK(is_connected(path_graph(5)));
}

TEST_CASE("induced subgraph keeps labels and edges among kept vertices") {
    auto g = complete_graph(5);
    const auto h = g.induced({1, 3, 4});
    CHECK(h.vertex_count() == 3);
    CHECK(h.edges().size() == 3);
    CHECK(h.label(0) == "1");
}
