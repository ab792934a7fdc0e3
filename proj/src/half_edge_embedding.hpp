#pragma once

// Doubly linked rotation system used while building and triangulating
// embeddings. "cw"/"ccw" follow the convention of CombinatorialEmbedding:
// following cw links from first_nbr enumerates rotation[v].

#include <map>
#include <vector>

#include "simemb/core.hpp"
#include "simemb/planarity.hpp"

namespace simemb::detail {

class HalfEdgeEmbedding {
public:
    explicit HalfEdgeEmbedding(int n) : links_(n), first_(n, -1) {}

    explicit HalfEdgeEmbedding(const std::vector<std::vector<int>>& rotation) : HalfEdgeEmbedding(static_cast<int>(rotation.size())) {
        for (int v = 0; v < static_cast<int>(rotation.size()); ++v) {
            int prev = -1;
            for (int w : rotation[v]) {
                add_half_edge_cw(v, w, prev);
                prev = w;
            }
        }
    }

    int size() const { return static_cast<int>(first_.size()); }
    bool has_edge(int v, int w) const { return links_[v].count(w) != 0; }
    int cw(int v, int w) const { return links_[v].at(w).cw; }
    int ccw(int v, int w) const { return links_[v].at(w).ccw; }
    int first(int v) const { return first_[v]; }
    int degree(int v) const { return static_cast<int>(links_[v].size()); }

    /// Inserts w immediately clockwise of ref around v.
    void add_half_edge_cw(int v, int w, int ref) {
        if (links_[v].count(w)) throw Error("half-edge already present");
        if (ref < 0) {
            links_[v][w] = {w, w};
            first_[v] = w;
            return;
        }
        Link& r = links_[v].at(ref);
        const int after = r.cw;
        r.cw = w;
        links_[v][w] = {after, ref};
        links_[v][after].ccw = w;
    }

    /// Inserts w immediately counter-clockwise of ref around v.
    void add_half_edge_ccw(int v, int w, int ref) {
        if (ref < 0) {
            add_half_edge_cw(v, w, -1);
            return;
        }
        add_half_edge_cw(v, w, links_[v].at(ref).ccw);
        if (ref == first_[v]) first_[v] = w;
    }

    void add_half_edge_first(int v, int w) { add_half_edge_ccw(v, w, first_[v]); }

    /// Half-edge following (v,w) on its face.
    std::pair<int, int> next_face_half_edge(int v, int w) const { return {w, ccw(w, v)}; }

    std::vector<int> neighbors_cw_order(int v) const {
        std::vector<int> out;
        if (first_[v] < 0) return out;
        int w = first_[v];
        do {
            out.push_back(w);
            w = cw(v, w);
        } while (w != first_[v]);
        return out;
    }

    std::vector<std::vector<int>> rotation() const {
        std::vector<std::vector<int>> out(size());
        for (int v = 0; v < size(); ++v) out[v] = neighbors_cw_order(v);
        return out;
    }

private:
    struct Link {
        int cw = -1;
        int ccw = -1;
    };
    std::vector<std::map<int, Link>> links_;
    std::vector<int> first_;
};

}  // namespace simemb::detail
