#include "simemb/structures.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace simemb {

BipartiteMap bipartite_map(const PartitionPair& pair) {
    BipartiteMap bm;
    bm.element_count = pair.element_count();
    bm.graph = SimpleGraph(pair.elements());
    for (BlockRef b : pair.all_blocks()) bm.graph.add_vertex(pair.block_label(b));
    for (int e = 0; e < pair.element_count(); ++e)
        for (int p = 0; p < 2; ++p) bm.graph.add_edge(e, bm.block_vertex(pair, pair.block_ref_of(p, e)));
    return bm;
}

BlockIntersectionGraph block_intersection_graph(const PartitionPair& pair) {
    BlockIntersectionGraph big;
    for (BlockRef b : pair.all_blocks()) big.graph.add_vertex(pair.block_label(b));
    for (int e = 0; e < pair.element_count(); ++e)
        big.graph.add_edge(pair.flat_index(pair.block_ref_of(0, e)), pair.flat_index(pair.block_ref_of(1, e)));
    return big;
}

SupportGraph empty_support(const PartitionPair& pair) { return {SimpleGraph(pair.elements())}; }

namespace {

bool block_connected(const SimpleGraph& g, const std::vector<int>& members, std::vector<int>& mark, int stamp) {
    for (int v : members) mark[v] = stamp;
    std::vector<int> stack{members.front()};
    mark[members.front()] = -stamp;
    std::size_t seen = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (mark[w] == stamp) {
                mark[w] = -stamp;
                ++seen;
                stack.push_back(w);
            }
    }
    return seen == members.size();
}

void check_vertex_set(const SimpleGraph& g, const PartitionPair& pair) {
    if (g.vertex_count() != pair.element_count())
        throw VertexSetMismatch("graph has " + std::to_string(g.vertex_count()) + " vertices, universe has " +
                                std::to_string(pair.element_count()) + " elements");
}

}  // namespace

SupportCheck is_support(const SimpleGraph& graph, const PartitionPair& pair) {
    check_vertex_set(graph, pair);
    std::vector<int> mark(graph.vertex_count(), 0);
    int stamp = 0;
    for (BlockRef b : pair.all_blocks()) {
        if (!block_connected(graph, pair.block(b).members, mark, ++stamp)) return {false, b};
    }
    return {};
}

bool is_tree_based(const SimpleGraph& graph, const PartitionPair& pair) {
    check_vertex_set(graph, pair);
    for (BlockRef b : pair.all_blocks())
        if (!is_forest(graph.induced(pair.block(b).members))) return false;
    return true;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Finds a cycle among `edges` (local vertex ids) and returns its edges, or an
// empty vector when the edges form a forest.
std::vector<Edge> find_cycle(int n, const std::vector<Edge>& edges) {
    UnionFind uf(n);
    std::vector<std::vector<int>> forest(n);
    for (auto [u, v] : edges) {
        if (uf.unite(u, v)) {
            forest[u].push_back(v);
            forest[v].push_back(u);
            continue;
        }
        std::vector<int> prev(n, -1);
        std::deque<int> queue{u};
        prev[u] = u;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (x == v) break;
            for (int y : forest[x])
                if (prev[y] == -1) {
                    prev[y] = x;
                    queue.push_back(y);
                }
        }
        std::vector<Edge> cycle{make_edge(u, v)};
        for (int x = v; x != u; x = prev[x]) cycle.push_back(make_edge(x, prev[x]));
        return cycle;
    }
    return {};
}

}  // namespace

SupportGraph reduce_to_tree_based(const SupportGraph& support, const PartitionPair& pair) {
    auto check = is_support(support.graph, pair);
    if (!check) throw NotASupport("not a support: block " + pair.block_label(*check.violating_block) + " is disconnected");

    SupportGraph out = support;
    for (BlockRef b : pair.all_blocks()) {
        const auto& members = pair.block(b).members;
        const int other = 1 - b.partition;
        for (;;) {
            std::vector<Edge> local;
            for (int i = 0; i < static_cast<int>(members.size()); ++i)
                for (int j = i + 1; j < static_cast<int>(members.size()); ++j)
                    if (out.graph.has_edge(members[i], members[j])) local.push_back({i, j});
            auto cycle = find_cycle(static_cast<int>(members.size()), local);
            if (cycle.empty()) break;

            bool shared = true;
            const int first_block = pair.block_of(other, members[cycle.front().first]);
            for (auto [i, j] : cycle)
                shared = shared && pair.block_of(other, members[i]) == first_block &&
                         pair.block_of(other, members[j]) == first_block;

            std::optional<Edge> victim;
            for (auto [i, j] : cycle) {
                Edge e = make_edge(members[i], members[j]);
                if (!shared && pair.block_of(other, e.first) == pair.block_of(other, e.second)) continue;
                if (!victim || e < *victim) victim = e;
            }
            out.graph.remove_edge(victim->first, victim->second);
        }
    }
    return out;
}

std::vector<Edge> candidate_edges(const PartitionPair& pair) {
    std::set<Edge> edges;
    for (BlockRef b : pair.all_blocks()) {
        const auto& m = pair.block(b).members;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j) edges.insert(make_edge(m[i], m[j]));
    }
    return {edges.begin(), edges.end()};
}

}  // namespace simemb
