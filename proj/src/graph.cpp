#include "simemb/graph.hpp"

#include <algorithm>
#include <numeric>

namespace simemb {

SimpleGraph::SimpleGraph(int n) {
    for (int i = 0; i < n; ++i) add_vertex();
}

SimpleGraph::SimpleGraph(std::vector<std::string> labels) {
    for (auto& l : labels) add_vertex(std::move(l));
}

int SimpleGraph::add_vertex(std::string label) {
    const int v = vertex_count();
    labels_.push_back(label.empty() ? std::to_string(v) : std::move(label));
    adj_.emplace_back();
    return v;
}

bool SimpleGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw Error("edge endpoint out of range");
    if (u == v) throw Error("self-loops are not allowed");
    if (!edges_.insert(make_edge(u, v)).second) return false;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    return true;
}

bool SimpleGraph::remove_edge(int u, int v) {
    if (edges_.erase(make_edge(u, v)) == 0) return false;
    adj_[u].erase(std::find(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::find(adj_[v].begin(), adj_[v].end(), u));
    return true;
}

std::optional<int> SimpleGraph::find_vertex(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const {
    std::vector<int> pos(vertex_count(), -1);
    SimpleGraph h;
    for (int v : vertices) {
        pos.at(v) = h.add_vertex(labels_[v]);
    }
    for (int v : vertices)
        for (int w : adj_[v])
            if (pos[w] >= 0 && v < w) h.add_edge(pos[v], pos[w]);
    return h;
}

std::pair<std::vector<int>, int> connected_components(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }
    return {comp, count};
}

bool is_connected(const SimpleGraph& g) { return connected_components(g).second <= 1; }

bool is_forest(const SimpleGraph& g) {
    return g.edge_count() == g.vertex_count() - connected_components(g).second;
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

SimpleGraph complete_bipartite_graph(int a, int b) {
    SimpleGraph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

SimpleGraph grid_graph(int rows, int cols) {
    SimpleGraph g(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
            if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
        }
    return g;
}

SimpleGraph cycle_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

SimpleGraph subdivide_once(const SimpleGraph& g) {
    SimpleGraph h(g.labels());
    for (auto [u, v] : g.edges()) {
        int s = h.add_vertex(g.label(u) + "-" + g.label(v));
        h.add_edge(u, s);
        h.add_edge(s, v);
    }
    return h;
}

}  // namespace simemb
