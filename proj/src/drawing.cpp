// Straight-line grid drawing by the canonical-ordering shift method.
//
// Each connected component is made biconnected, fully triangulated, given a
// canonical ordering and placed with the shift method; the dummy edges are
// then forgotten because only vertex positions are kept.

#include <algorithm>
#include <set>

#include "half_edge_embedding.hpp"
#include "simemb/planarity.hpp"

namespace simemb {

namespace {

using detail::HalfEdgeEmbedding;

std::vector<int> make_bi_connected(HalfEdgeEmbedding& emb, int start, int out, std::set<std::pair<int, int>>& counted) {
    if (counted.count({start, out})) return {};
    counted.insert({start, out});

    int v1 = start, v2 = out;
    std::vector<int> face{start};
    std::set<int> face_set{start};
    int v3 = emb.next_face_half_edge(v1, v2).second;

    while (v2 != start || v3 != out) {
        if (v1 == v2) throw Error("invalid half-edge while triangulating");
        if (face_set.count(v2)) {
            emb.add_half_edge_cw(v1, v3, v2);
            emb.add_half_edge_ccw(v3, v1, v2);
            counted.insert({v2, v3});
            counted.insert({v3, v1});
            v2 = v1;
        } else {
            face_set.insert(v2);
            face.push_back(v2);
        }
        v1 = v2;
        std::tie(v2, v3) = emb.next_face_half_edge(v2, v3);
        counted.insert({v1, v2});
    }
    return face;
}

void triangulate_face(HalfEdgeEmbedding& emb, int v1, int v2) {
    int v3 = emb.next_face_half_edge(v1, v2).second;
    int v4 = emb.next_face_half_edge(v2, v3).second;
    if (v1 == v2 || v1 == v3) return;
    while (v1 != v4) {
        if (emb.has_edge(v1, v3)) {
            v1 = v2;
            v2 = v3;
            v3 = v4;
        } else {
            emb.add_half_edge_cw(v1, v3, v2);
            emb.add_half_edge_ccw(v3, v1, v2);
            v2 = v3;
            v3 = v4;
        }
        v4 = emb.next_face_half_edge(v2, v3).second;
    }
}

// Returns the outer triangle.
std::vector<int> triangulate_embedding(HalfEdgeEmbedding& emb, const std::vector<int>& nodes) {
    std::vector<int> outer;
    std::vector<std::vector<int>> faces;
    std::set<std::pair<int, int>> counted;
    for (int v : nodes) {
        for (int w : emb.neighbors_cw_order(v)) {
            auto face = make_bi_connected(emb, v, w, counted);
            if (face.empty()) continue;
            faces.push_back(std::move(face));
            if (faces.back().size() > outer.size()) outer = faces.back();
        }
    }
    for (const auto& face : faces) triangulate_face(emb, face[0], face[1]);
    const int v1 = outer[0], v2 = outer[1];
    return {v1, v2, emb.ccw(v2, v1)};
}

struct OrderEntry {
    int vertex;
    std::vector<int> contour;
};

std::vector<OrderEntry> canonical_ordering(const HalfEdgeEmbedding& emb, const std::vector<int>& nodes,
                                           const std::vector<int>& outer_face) {
    const int n = emb.size();
    const int v1 = outer_face[0];
    const int v2 = outer_face[1];
    std::vector<int> chords(n, 0);
    std::vector<bool> marked(n, false);
    std::vector<int> ccw_nbr(n, -1), cw_nbr(n, -1);

    int prev = v2;
    for (std::size_t i = 2; i < outer_face.size(); ++i) {
        ccw_nbr[prev] = outer_face[i];
        prev = outer_face[i];
    }
    ccw_nbr[prev] = v1;
    prev = v1;
    for (std::size_t i = outer_face.size() - 1; i > 0; --i) {
        cw_nbr[prev] = outer_face[i];
        prev = outer_face[i];
    }

    auto is_outer_face_nbr = [&](int x, int y) {
        if (ccw_nbr[x] == -1) return cw_nbr[x] == y;
        if (cw_nbr[x] == -1) return ccw_nbr[x] == y;
        return ccw_nbr[x] == y || cw_nbr[x] == y;
    };
    auto is_on_outer_face = [&](int x) { return !marked[x] && (ccw_nbr[x] != -1 || x == v1); };

    for (int v : outer_face)
        for (int nbr : emb.neighbors_cw_order(v))
            if (is_on_outer_face(nbr) && !is_outer_face_nbr(v, nbr)) ++chords[v];

    std::set<int> ready;
    for (int v : outer_face)
        if (v != v1 && v != v2 && chords[v] == 0) ready.insert(v);

    std::vector<OrderEntry> order(nodes.size());
    order[0] = {v1, {}};
    order[1] = {v2, {}};

    for (int k = static_cast<int>(nodes.size()) - 1; k > 1; --k) {
        if (ready.empty()) throw Error("canonical ordering failed");
        const int v = *ready.begin();
        ready.erase(ready.begin());
        marked[v] = true;

        int wp = -1, wq = -1;
        for (int nbr : emb.neighbors_cw_order(v)) {
            if (marked[nbr]) continue;
            if (is_on_outer_face(nbr)) {
                if (nbr == v1) {
                    wp = v1;
                } else if (nbr == v2) {
                    wq = v2;
                } else if (cw_nbr[nbr] == v) {
                    wp = nbr;
                } else {
                    wq = nbr;
                }
            }
            if (wp != -1 && wq != -1) break;
        }
        if (wp == -1 || wq == -1) throw Error("canonical ordering failed");

        std::vector<int> wp_wq{wp};
        int nbr = wp;
        while (nbr != wq) {
            const int next = emb.ccw(v, nbr);
            wp_wq.push_back(next);
            cw_nbr[nbr] = next;
            ccw_nbr[next] = nbr;
            nbr = next;
        }

        if (wp_wq.size() == 2) {
            if (--chords[wp] == 0) ready.insert(wp);
            if (--chords[wq] == 0) ready.insert(wq);
        } else {
            std::set<int> fresh(wp_wq.begin() + 1, wp_wq.end() - 1);
            for (int w : fresh) {
                ready.insert(w);
                for (int x : emb.neighbors_cw_order(w)) {
                    if (is_on_outer_face(x) && !is_outer_face_nbr(w, x)) {
                        ++chords[w];
                        ready.erase(w);
                        if (!fresh.count(x)) {
                            ++chords[x];
                            ready.erase(x);
                        }
                    }
                }
            }
        }
        order[k] = {v, std::move(wp_wq)};
    }
    return order;
}

// Positions for one connected component given by `nodes` (ascending).
void draw_component(const HalfEdgeEmbedding& base, const std::vector<int>& nodes, std::vector<IPoint>& pos) {
    if (nodes.size() == 1) {
        pos[nodes[0]] = {0, 0};
        return;
    }
    if (nodes.size() == 2) {
        pos[nodes[0]] = {0, 0};
        pos[nodes[1]] = {1, 0};
        return;
    }
    if (nodes.size() == 3) {
        const IPoint tri[3] = {{0, 0}, {2, 0}, {1, 1}};
        for (int i = 0; i < 3; ++i) pos[nodes[i]] = tri[i];
        return;
    }

    HalfEdgeEmbedding emb = base;
    auto outer = triangulate_embedding(emb, nodes);
    auto order = canonical_ordering(emb, nodes, outer);

    const int n = emb.size();
    std::vector<int> left(n, -1), right(n, -1);
    std::vector<long long> dx(n, 0), y(n, 0);

    const int v1 = order[0].vertex, v2 = order[1].vertex, v3 = order[2].vertex;
    dx[v1] = 0;
    y[v1] = 0;
    right[v1] = v3;
    dx[v2] = 1;
    y[v2] = 0;
    dx[v3] = 1;
    y[v3] = 1;
    right[v3] = v2;

    for (std::size_t k = 3; k < order.size(); ++k) {
        const int vk = order[k].vertex;
        const auto& c = order[k].contour;
        const int wp = c.front(), wp1 = c[1], wq = c.back(), wq1 = c[c.size() - 2];
        const bool mult = c.size() > 2;

        dx[wp1] += 1;
        dx[wq] += 1;
        long long span = 0;
        for (std::size_t i = 1; i < c.size(); ++i) span += dx[c[i]];

        dx[vk] = (-y[wp] + span + y[wq]) / 2;
        y[vk] = (y[wp] + span + y[wq]) / 2;
        dx[wq] = span - dx[vk];
        if (mult) dx[wp1] -= dx[vk];

        right[wp] = vk;
        right[vk] = wq;
        if (mult) {
            left[vk] = wp1;
            right[wq1] = -1;
        } else {
            left[vk] = -1;
        }
    }

    pos[v1] = {0, y[v1]};
    std::vector<int> remaining{v1};
    while (!remaining.empty()) {
        const int parent = remaining.back();
        remaining.pop_back();
        for (int child : {left[parent], right[parent]}) {
            if (child == -1) continue;
            pos[child] = {pos[parent].x + dx[child], y[child]};
            remaining.push_back(child);
        }
    }
}

long long orient(IPoint a, IPoint b, IPoint c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

bool on_segment(IPoint a, IPoint b, IPoint p) {
    return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

int sgn(long long v) { return (v > 0) - (v < 0); }

}  // namespace

bool segments_intersect(IPoint a, IPoint b, IPoint c, IPoint d) {
    const int d1 = sgn(orient(c, d, a)), d2 = sgn(orient(c, d, b));
    const int d3 = sgn(orient(a, b, c)), d4 = sgn(orient(a, b, d));
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    return on_segment(c, d, a) || on_segment(c, d, b) || on_segment(a, b, c) || on_segment(a, b, d);
}

int count_drawing_conflicts(const SimpleGraph& graph, const std::vector<IPoint>& pos) {
    int conflicts = 0;
    for (int v = 0; v < graph.vertex_count(); ++v)
        for (int w = v + 1; w < graph.vertex_count(); ++w)
            if (pos[v] == pos[w]) ++conflicts;
    std::vector<Edge> edges(graph.edges().begin(), graph.edges().end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        for (int v = 0; v < graph.vertex_count(); ++v)
            if (v != a && v != b && on_segment(pos[a], pos[b], pos[v])) ++conflicts;
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [c, d] = edges[j];
            const bool shared = a == c || a == d || b == c || b == d;
            if (!shared) {
                if (segments_intersect(pos[a], pos[b], pos[c], pos[d])) ++conflicts;
                continue;
            }
            // Edges with a common endpoint conflict only when they overlap.
            const int s = (a == c || a == d) ? a : b;
            const int x = s == a ? b : a;
            const int y = (s == c) ? d : c;
            if (orient(pos[s], pos[x], pos[y]) == 0 &&
                (pos[x].x - pos[s].x) * (pos[y].x - pos[s].x) + (pos[x].y - pos[s].y) * (pos[y].y - pos[s].y) > 0)
                ++conflicts;
        }
    }
    return conflicts;
}

PlanarDrawing straight_line_drawing(const CombinatorialEmbedding& embedding) {
    const SimpleGraph& g = embedding.graph;
    const int n = g.vertex_count();
    PlanarDrawing out{embedding, std::vector<IPoint>(n)};
    if (n == 0) return out;

    HalfEdgeEmbedding emb(embedding.rotation);
    auto [comp, count] = connected_components(g);
    std::vector<std::vector<int>> members(count);
    for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);

    long long offset = 0;
    for (const auto& nodes : members) {
        draw_component(emb, nodes, out.positions);
        long long min_x = out.positions[nodes[0]].x, max_x = min_x;
        for (int v : nodes) {
            min_x = std::min(min_x, out.positions[v].x);
            max_x = std::max(max_x, out.positions[v].x);
        }
        for (int v : nodes) out.positions[v].x += offset - min_x;
        offset += max_x - min_x + 1;
    }
    return out;
}

}  // namespace simemb
