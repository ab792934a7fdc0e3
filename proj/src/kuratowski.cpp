// Exhaustive Kuratowski-subdivision search used as an independent planarity
// oracle for small graphs.

#include <algorithm>
#include <functional>

#include "simemb/planarity.hpp"

namespace simemb {

namespace {

class SubdivisionSearch {
public:
    SubdivisionSearch(const SimpleGraph& g, std::vector<Edge> pairs, std::vector<int> branch)
        : g_(g), pairs_(std::move(pairs)), used_(g.vertex_count(), false), paths_(pairs_.size()) {
        for (int b : branch) used_[b] = true;
    }

    bool run() { return route(0); }
    const std::vector<std::vector<int>>& paths() const { return paths_; }

private:
    bool route(std::size_t k) {
        if (k == pairs_.size()) return true;
        auto [s, t] = pairs_[k];
        std::vector<int> path{s};
        return extend(k, s, t, path);
    }

    bool extend(std::size_t k, int v, int t, std::vector<int>& path) {
        for (int w : g_.neighbors(v)) {
            if (w == t) {
                if (path.size() == 1 && taken_direct(v, t)) continue;
                path.push_back(t);
                if (path.size() == 2) direct_.push_back(make_edge(v, t));
                paths_[k] = path;
                if (route(k + 1)) return true;
                if (path.size() == 2) direct_.pop_back();
                path.pop_back();
                continue;
            }
            if (used_[w]) continue;
            used_[w] = true;
            path.push_back(w);
            if (extend(k, w, t, path)) return true;
            path.pop_back();
            used_[w] = false;
        }
        return false;
    }

    bool taken_direct(int a, int b) const {
        return std::find(direct_.begin(), direct_.end(), make_edge(a, b)) != direct_.end();
    }

    const SimpleGraph& g_;
    std::vector<Edge> pairs_;
    std::vector<bool> used_;
    std::vector<Edge> direct_;
    std::vector<std::vector<int>> paths_;
};

void for_each_subset(const std::vector<int>& pool, int size, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(pick.size()) == size) return fn(pick);
        for (std::size_t i = start; i < pool.size(); ++i) {
            if (pool.size() - i < static_cast<std::size_t>(size) - pick.size()) break;
            pick.push_back(pool[i]);
            if (rec(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    rec(0);
}

}  // namespace

std::optional<KuratowskiWitness> find_kuratowski_subdivision(const SimpleGraph& g, int max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw TooLarge("brute-force planarity limited to " + std::to_string(max_vertices) + " vertices");

    std::optional<KuratowskiWitness> found;

    std::vector<int> deg4, deg3;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) >= 4) deg4.push_back(v);
        if (g.degree(v) >= 3) deg3.push_back(v);
    }

    for_each_subset(deg4, 5, [&](const std::vector<int>& b) {
        std::vector<Edge> pairs;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) pairs.push_back({b[i], b[j]});
        SubdivisionSearch search(g, pairs, b);
        if (!search.run()) return false;
        found = KuratowskiWitness{true, b, search.paths()};
        return true;
    });
    if (found) return found;

    for_each_subset(deg3, 6, [&](const std::vector<int>& six) {
        // Split into sides {six[0], x, y} and the rest.
        for (int i = 1; i < 6; ++i) {
            for (int j = i + 1; j < 6; ++j) {
                std::vector<int> side_a{six[0], six[i], six[j]}, side_b;
                for (int k = 1; k < 6; ++k)
                    if (k != i && k != j) side_b.push_back(six[k]);
                std::vector<Edge> pairs;
                for (int a : side_a)
                    for (int bb : side_b) pairs.push_back({a, bb});
                SubdivisionSearch search(g, pairs, six);
                if (!search.run()) continue;
                std::vector<int> branch = side_a;
                branch.insert(branch.end(), side_b.begin(), side_b.end());
                found = KuratowskiWitness{false, branch, search.paths()};
                return true;
            }
        }
        return false;
    });
    return found;
}

bool is_planar_bruteforce(const SimpleGraph& graph, int max_vertices) {
    return !find_kuratowski_subdivision(graph, max_vertices).has_value();
}

}  // namespace simemb
