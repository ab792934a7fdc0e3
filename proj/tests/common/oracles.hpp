#pragma once
// Small, slow, obviously-correct reference computations used to check the
// library. Nothing here calls into the code paths under test.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "simemb/core.hpp"
#include "simemb/graph.hpp"

namespace oracle {

using simemb::PartitionPair;
using simemb::SimpleGraph;

// Vertices of `members` reachable from members[0] using only edges inside the set.
inline bool induces_connected(const SimpleGraph& g, const std::vector<int>& members) {
    if (members.empty()) return true;
    std::set<int> in(members.begin(), members.end()), seen{members[0]};
    std::vector<int> stack{members[0]};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (in.count(w) && seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == in.size();
}

inline bool is_support(const SimpleGraph& g, const PartitionPair& pair) {
    for (int p = 0; p < 2; ++p)
        for (const auto& b : pair.blocks(p))
            if (!induces_connected(g, b.members)) return false;
    return true;
}

inline int component_count(const SimpleGraph& g) {
    std::vector<int> seen(g.vertex_count(), 0);
    int count = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        ++count;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!seen[w]) seen[w] = 1, stack.push_back(w);
        }
    }
    return count;
}

// Pairs of flat block indices whose blocks share an element.
inline std::set<std::pair<int, int>> intersecting_blocks(const PartitionPair& pair) {
    std::set<std::pair<int, int>> out;
    const auto all = pair.all_blocks();
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const auto& a = pair.block(all[i]).members;
            const auto& b = pair.block(all[j]).members;
            std::vector<int> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (!common.empty()) out.insert({static_cast<int>(i), static_cast<int>(j)});
        }
    return out;
}

// The bipartite map with every element vertex (always of degree two)
// smoothed away and parallel edges merged; planar exactly when the map is.
inline SimpleGraph bipartite_map_skeleton(const PartitionPair& pair) {
    SimpleGraph g(pair.block_count());
    for (int e = 0; e < pair.element_count(); ++e) {
        const int a = pair.block_of(0, e);
        const int b = pair.block_count(0) + pair.block_of(1, e);
        g.add_edge(a, b);
    }
    return g;
}

// Number of face walks of a rotation system: the dart after (u, v) is (v, w)
// where w follows u in rot[v].
inline int face_count(const std::vector<std::vector<int>>& rot) {
    std::set<std::pair<int, int>> used;
    int faces = 0;
    for (int u = 0; u < static_cast<int>(rot.size()); ++u)
        for (int v : rot[u]) {
            if (used.count({u, v})) continue;
            ++faces;
            int a = u, b = v;
            while (used.insert({a, b}).second) {
                const auto& r = rot[b];
                auto it = std::find(r.begin(), r.end(), a);
                int next = (it + 1 == r.end()) ? r.front() : *(it + 1);
                a = b;
                b = next;
            }
        }
    return faces;
}

// Exact planarity by trying every rotation system (feasible for small graphs):
// a connected graph is planar iff some rotation system satisfies V - E + F = 2.
inline bool planar_by_rotations(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        rot[v] = g.neighbors(v);
        std::sort(rot[v].begin(), rot[v].end());
    }
    const int e = static_cast<int>(g.edges().size());
    if (n >= 3 && e > 3 * n - 6) return false;
    const int comps = component_count(g);
    int isolated = 0;
    for (int v = 0; v < n; ++v)
        if (rot[v].empty()) ++isolated;
    // Each component with edges contributes V_c - E_c + F_c = 2.
    const int target = 2 * (comps - isolated) - (n - isolated) + e;
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n) return face_count(rot) == target;
        if (rot[v].size() <= 2) return rec(v + 1);
        // Fix the first neighbour to avoid cyclic duplicates.
        auto& r = rot[v];
        do {
            if (rec(v + 1)) return true;
        } while (std::next_permutation(r.begin() + 1, r.end()));
        return false;
    };
    return rec(0);
}

}  // namespace oracle
