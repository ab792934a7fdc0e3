#pragma once

#include <optional>
#include <vector>

#include "simemb/graph.hpp"

namespace simemb {

class NotPlanar : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

/// Rotation system of a planar graph. rotation[v] lists the neighbours of v
/// in clockwise order; the face after half-edge (u,v) is (v, w) where w is the
/// neighbour preceding u in rotation[v].
struct CombinatorialEmbedding {
    SimpleGraph graph;
    std::vector<std::vector<int>> rotation;
    /// One vertex sequence per face walk; consecutive vertices (cyclically)
    /// are the half-edges of the face. Isolated vertices have no walk.
    std::vector<std::vector<int>> faces;

    /// Number of faces of the whole plane drawing (components share the
    /// unbounded face), so v - e + f = 1 + #components.
    int face_count() const;
};

struct IPoint {
    long long x = 0;
    long long y = 0;
    friend bool operator==(const IPoint&, const IPoint&) = default;
};

struct PlanarDrawing {
    CombinatorialEmbedding embedding;
    std::vector<IPoint> positions;
};

bool is_planar(const SimpleGraph& graph);

/// Throws NotPlanar when the graph is not planar.
CombinatorialEmbedding planar_embedding(const SimpleGraph& graph);

/// Rebuilds the face list from `rotation`.
std::vector<std::vector<int>> trace_faces(const std::vector<std::vector<int>>& rotation);

/// True if the faces of the rotation system satisfy Euler's formula.
bool is_planar_rotation(const SimpleGraph& graph, const std::vector<std::vector<int>>& rotation);

/// Straight-line drawing on the integer grid. Components are drawn one after
/// another from left to right.
PlanarDrawing straight_line_drawing(const CombinatorialEmbedding& embedding);

/// Exact test for a proper or improper intersection of two closed segments
/// that do not share an endpoint vertex.
bool segments_intersect(IPoint a, IPoint b, IPoint c, IPoint d);

/// Number of pairs of edges without a common endpoint whose segments touch,
/// plus pairs of edges sharing an endpoint that overlap collinearly, plus
/// vertices lying on non-incident edges.
int count_drawing_conflicts(const SimpleGraph& graph, const std::vector<IPoint>& positions);

struct KuratowskiWitness {
    bool k5 = false;               // otherwise K3,3
    std::vector<int> branch;       // 5 vertices, or 3 + 3 for the two sides
    std::vector<std::vector<int>> paths;
};

/// Exhaustive search for a subdivision of K5 or K3,3. Throws TooLarge above
/// `max_vertices` vertices.
std::optional<KuratowskiWitness> find_kuratowski_subdivision(const SimpleGraph& graph, int max_vertices = 12);

bool is_planar_bruteforce(const SimpleGraph& graph, int max_vertices = 12);

}  // namespace simemb
