#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "simemb/core.hpp"

namespace simemb {

using Edge = std::pair<int, int>;  // always stored with first < second

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Undirected simple graph on vertices 0..n-1. Every vertex carries a label
/// (an opaque token) used only for I/O.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    explicit SimpleGraph(std::vector<std::string> labels);

    int add_vertex(std::string label = {});
    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Returns false if the edge already exists. Throws on self-loops or
    /// out-of-range endpoints.
    bool add_edge(int u, int v);
    bool remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return edges_.count(make_edge(u, v)) != 0; }

    /// Neighbours in insertion order.
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    /// All edges, sorted lexicographically.
    const std::set<Edge>& edges() const { return edges_; }

    const std::string& label(int v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> find_vertex(const std::string& label) const;

    /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
    SimpleGraph induced(const std::vector<int>& vertices) const;

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adj_;
    std::set<Edge> edges_;
};

/// Component index per vertex (numbered in order of smallest vertex) and the
/// number of components.
std::pair<std::vector<int>, int> connected_components(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);
bool is_forest(const SimpleGraph& g);

SimpleGraph complete_graph(int n);
SimpleGraph complete_bipartite_graph(int a, int b);
SimpleGraph grid_graph(int rows, int cols);
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
/// Replaces every edge by a path of length two through a new vertex.
SimpleGraph subdivide_once(const SimpleGraph& g);

}  // namespace simemb
