#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simemb/core.hpp"
#include "simemb/geometry.hpp"
#include "simemb/graph.hpp"
#include "simemb/structures.hpp"

namespace simemb {

enum class EmbeddingLevel { Weak, Strong, Full };

std::string_view to_string(EmbeddingLevel level);

/// Element points and one simple polygon per block.
struct EmbeddingArtifact {
    PartitionPair pair;
    std::vector<Point> points;     // indexed by element
    std::vector<Polygon> regions;  // indexed by PartitionPair::flat_index
    EmbeddingLevel level = EmbeddingLevel::Weak;
    /// True for artifacts built by this library; the strong check is only
    /// conclusive for those.
    bool self_produced = false;
};

struct ValidationReport {
    bool membership_ok = true;
    bool same_partition_disjoint = true;
    bool intersecting_pairs_share_element = true;
    bool disjoint_blocks_disjoint = true;
    bool pseudo_disk_ok = true;
    /// Proper boundary crossings for every examined pair of regions (flat indices, a < b).
    std::map<std::pair<int, int>, int> crossing_counts;
    std::vector<std::string> problems;
    std::string note;

    bool weak_ok() const { return membership_ok && same_partition_disjoint; }
    bool strong_ok() const { return weak_ok() && intersecting_pairs_share_element && disjoint_blocks_disjoint; }
    bool full_ok() const { return strong_ok() && pseudo_disk_ok; }
    bool passes(EmbeddingLevel level) const;
};

class SelfIntersectingPolygon : public Error {
public:
    using Error::Error;
};

class TangentBoundaries : public Error {
public:
    using Error::Error;
};

class NotFullyEmbeddable : public Error {
public:
    using Error::Error;
};

/// Maps a tree (connected, acyclic) bijectively onto `points` so that the
/// straight-line edges do not cross. result[v] is the index of v's point.
std::vector<int> tree_on_points(const SimpleGraph& tree, const std::vector<Point>& points);

/// Boundary of the Minkowski sum of a straight-line tree with the octagon of
/// radius r, traced counter-clockwise. `vertices` are the tree's vertices
/// (indices into positions) and `edges` its edges.
Polygon inflate_tree(const std::vector<Point>& positions, const std::vector<int>& vertices,
                     const std::vector<Edge>& edges, const Rational& r);

/// Octagon of radius r centred at c (counter-clockwise).
Polygon octagon(const Point& c, const Rational& r);

/// Deterministic general-position point set of size n.
std::vector<Point> default_points(int n);

EmbeddingArtifact weak_embedding(const PartitionPair& pair, const std::optional<std::vector<Point>>& points = std::nullopt);
EmbeddingArtifact strong_embedding(const PartitionPair& pair, const SupportGraph& support);
EmbeddingArtifact full_embedding(const PartitionPair& pair);

ValidationReport validate_embedding(const EmbeddingArtifact& artifact, EmbeddingLevel level);

}  // namespace simemb
