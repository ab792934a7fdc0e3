#pragma once

#include <optional>
#include <vector>

#include "simemb/core.hpp"
#include "simemb/graph.hpp"

namespace simemb {

/// Element vertices come first (vertex e is element e), followed by one vertex
/// per block in PartitionPair::all_blocks() order.
struct BipartiteMap {
    SimpleGraph graph;
    int element_count = 0;

    int block_vertex(const PartitionPair& pair, BlockRef b) const { return element_count + pair.flat_index(b); }
    bool is_element_vertex(int v) const { return v < element_count; }
};

/// Vertex i is the block with flat index i.
struct BlockIntersectionGraph {
    SimpleGraph graph;
};

/// A graph on the universe: vertex e is element e, labelled with its id.
struct SupportGraph {
    SimpleGraph graph;
};

struct SupportCheck {
    bool ok = true;
    std::optional<BlockRef> violating_block;

    explicit operator bool() const { return ok; }
};

BipartiteMap bipartite_map(const PartitionPair& pair);
BlockIntersectionGraph block_intersection_graph(const PartitionPair& pair);

/// Fresh edgeless graph on the universe of `pair`.
SupportGraph empty_support(const PartitionPair& pair);

/// Throws VertexSetMismatch when the graph is not on the pair's universe.
SupportCheck is_support(const SimpleGraph& graph, const PartitionPair& pair);

/// Removes cycle edges until every block-induced subgraph is a forest (and,
/// because the input is a support, a spanning tree of its block). Throws
/// NotASupport when the input is not a support.
SupportGraph reduce_to_tree_based(const SupportGraph& support, const PartitionPair& pair);

bool is_tree_based(const SimpleGraph& graph, const PartitionPair& pair);

/// Every unordered pair of elements sharing a block, sorted.
std::vector<Edge> candidate_edges(const PartitionPair& pair);

class VertexSetMismatch : public Error {
public:
    using Error::Error;
};

class NotASupport : public Error {
public:
    using Error::Error;
};

}  // namespace simemb
