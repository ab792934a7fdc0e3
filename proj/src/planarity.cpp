// Left-right planarity test with embedding extraction.
//
// The DFS orientation, conflict-pair stack and sign resolution follow the
// classical formulation of the left-right criterion; the embedding phase
// inserts back edges next to the reference tree edges on their resolved side.

#include <algorithm>
#include <optional>

#include "half_edge_embedding.hpp"
#include "simemb/planarity.hpp"

namespace simemb {

namespace {

constexpr int kNone = -1;

struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
};

struct ConflictPair {
    int id = 0;
    Interval left;
    Interval right;
    void swap() { std::swap(left, right); }
};

class LRPlanarity {
public:
    explicit LRPlanarity(const SimpleGraph& g) : g_(g), n_(g.vertex_count()) {}

    std::optional<detail::HalfEdgeEmbedding> run() {
        const int m = g_.edge_count();
        if (n_ > 2 && m > 3 * n_ - 6) return std::nullopt;

        source_.reserve(m);
        target_.reserve(m);
        edge_ids_.assign(n_, {});
        for (int v = 0; v < n_; ++v) edge_ids_[v].assign(g_.degree(v), kNone);

        height_.assign(n_, kNone);
        parent_edge_.assign(n_, kNone);
        out_.assign(n_, {});
        for (int v = 0; v < n_; ++v) {
            if (height_[v] != kNone) continue;
            height_[v] = 0;
            roots_.push_back(v);
            dfs_orientation(v);
        }

        const int oriented = static_cast<int>(source_.size());
        ref_.assign(oriented, kNone);
        side_.assign(oriented, 1);
        stack_bottom_.assign(oriented, kNone);
        lowpt_edge_.assign(oriented, kNone);

        sort_adjacencies();
        for (int v : roots_)
            if (!dfs_testing(v)) return std::nullopt;

        for (int e = 0; e < oriented; ++e) nesting_depth_[e] *= sign(e);

        detail::HalfEdgeEmbedding emb(n_);
        sort_adjacencies();
        for (int v = 0; v < n_; ++v) {
            int prev = kNone;
            for (int e : ordered_adjs_[v]) {
                emb.add_half_edge_cw(v, target_[e], prev);
                prev = target_[e];
            }
        }
        left_ref_.assign(n_, kNone);
        right_ref_.assign(n_, kNone);
        for (int v : roots_) dfs_embedding(v, emb);
        return emb;
    }

private:
    int new_edge(int v, int w) {
        const int id = static_cast<int>(source_.size());
        source_.push_back(v);
        target_.push_back(w);
        lowpt_.push_back(0);
        lowpt2_.push_back(0);
        nesting_depth_.push_back(0);
        out_[v].push_back(id);
        return id;
    }

    void mark_oriented(int v, int idx, int w, int id) {
        edge_ids_[v][idx] = id;
        const auto& nb = g_.neighbors(w);
        const auto it = std::find(nb.begin(), nb.end(), v);
        edge_ids_[w][it - nb.begin()] = id;
    }

    void dfs_orientation(int v) {
        const int e = parent_edge_[v];
        const auto& nb = g_.neighbors(v);
        for (int i = 0; i < static_cast<int>(nb.size()); ++i) {
            if (edge_ids_[v][i] != kNone) continue;
            const int w = nb[i];
            const int vw = new_edge(v, w);
            mark_oriented(v, i, w, vw);
            lowpt_[vw] = height_[v];
            lowpt2_[vw] = height_[v];
            if (height_[w] == kNone) {
                parent_edge_[w] = vw;
                height_[w] = height_[v] + 1;
                dfs_orientation(w);
            } else {
                lowpt_[vw] = height_[w];
            }

            nesting_depth_[vw] = 2 * lowpt_[vw];
            if (lowpt2_[vw] < height_[v]) nesting_depth_[vw] += 1;

            if (e != kNone) {
                if (lowpt_[vw] < lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
                    lowpt_[e] = lowpt_[vw];
                } else if (lowpt_[vw] > lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
                } else {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
                }
            }
        }
    }

    void sort_adjacencies() {
        ordered_adjs_ = out_;
        for (auto& adj : ordered_adjs_)
            std::stable_sort(adj.begin(), adj.end(),
                             [&](int a, int b) { return nesting_depth_[a] < nesting_depth_[b]; });
    }

    void set_ref(int e, int value) {
        if (e != kNone) ref_[e] = value;
    }

    int top_id() const { return stack_.empty() ? kNone : stack_.back().id; }

    bool conflicting(const Interval& i, int b) const { return !i.empty() && lowpt_[i.high] > lowpt_[b]; }

    int lowest(const ConflictPair& p) const {
        if (p.left.empty()) return lowpt_[p.right.low];
        if (p.right.empty()) return lowpt_[p.left.low];
        return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
    }

    bool dfs_testing(int v) {
        const int e = parent_edge_[v];
        const auto& adj = ordered_adjs_[v];
        for (std::size_t k = 0; k < adj.size(); ++k) {
            const int ei = adj[k];
            const int w = target_[ei];
            stack_bottom_[ei] = top_id();
            if (ei == parent_edge_[w]) {
                if (!dfs_testing(w)) return false;
            } else {
                lowpt_edge_[ei] = ei;
                ConflictPair p;
                p.id = next_pair_id_++;
                p.right = {ei, ei};
                stack_.push_back(p);
            }
            if (lowpt_[ei] < height_[v]) {
                if (k == 0) {
                    lowpt_edge_[e] = lowpt_edge_[ei];
                } else if (!add_constraints(ei, e)) {
                    return false;
                }
            }
        }
        if (e != kNone) remove_back_edges(e);
        return true;
    }

    bool add_constraints(int ei, int e) {
        ConflictPair p;
        p.id = next_pair_id_++;
        do {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (!q.left.empty()) q.swap();
            if (!q.left.empty()) return false;
            if (lowpt_[q.right.low] > lowpt_[e]) {
                if (p.right.empty()) {
                    p.right = q.right;
                } else {
                    set_ref(p.right.low, q.right.high);
                }
                p.right.low = q.right.low;
            } else {
                set_ref(q.right.low, lowpt_edge_[e]);
            }
        } while (top_id() != stack_bottom_[ei]);

        while (!stack_.empty() &&
               (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (conflicting(q.right, ei)) q.swap();
            if (conflicting(q.right, ei)) return false;
            set_ref(p.right.low, q.right.high);
            if (q.right.low != kNone) p.right.low = q.right.low;
            if (p.left.empty()) {
                p.left = q.left;
            } else {
                set_ref(p.left.low, q.left.high);
            }
            p.left.low = q.left.low;
        }

        if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
        return true;
    }

    void remove_back_edges(int e) {
        const int u = source_[e];
        while (!stack_.empty() && lowest(stack_.back()) == height_[u]) {
            ConflictPair p = stack_.back();
            stack_.pop_back();
            if (p.left.low != kNone) side_[p.left.low] = -1;
        }

        if (!stack_.empty()) {
            ConflictPair p = stack_.back();
            stack_.pop_back();
            while (p.left.high != kNone && target_[p.left.high] == u) p.left.high = ref_[p.left.high];
            if (p.left.high == kNone && p.left.low != kNone) {
                set_ref(p.left.low, p.right.low);
                side_[p.left.low] = -1;
                p.left.low = kNone;
            }
            while (p.right.high != kNone && target_[p.right.high] == u) p.right.high = ref_[p.right.high];
            if (p.right.high == kNone && p.right.low != kNone) {
                set_ref(p.right.low, p.left.high);
                side_[p.right.low] = -1;
                p.right.low = kNone;
            }
            stack_.push_back(p);
        }

        if (lowpt_[e] < height_[u] && !stack_.empty()) {
            const int hl = stack_.back().left.high;
            const int hr = stack_.back().right.high;
            if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) {
                set_ref(e, hl);
            } else {
                set_ref(e, hr);
            }
        }
    }

    int sign(int e) {
        std::vector<int> chain;
        for (int x = e; ref_[x] != kNone; x = ref_[x]) chain.push_back(x);
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            side_[*it] *= side_[ref_[*it]];
            ref_[*it] = kNone;
        }
        return side_[e];
    }

    void dfs_embedding(int v, detail::HalfEdgeEmbedding& emb) {
        for (int ei : ordered_adjs_[v]) {
            const int w = target_[ei];
            if (ei == parent_edge_[w]) {
                emb.add_half_edge_first(w, v);
                left_ref_[v] = w;
                right_ref_[v] = w;
                dfs_embedding(w, emb);
            } else if (side_[ei] == 1) {
                emb.add_half_edge_cw(w, v, right_ref_[w]);
            } else {
                emb.add_half_edge_ccw(w, v, left_ref_[w]);
                left_ref_[w] = v;
            }
        }
    }

    const SimpleGraph& g_;
    int n_;
    std::vector<std::vector<int>> edge_ids_;
    std::vector<int> source_, target_, lowpt_, lowpt2_, nesting_depth_;
    std::vector<int> height_, parent_edge_, roots_;
    std::vector<std::vector<int>> out_, ordered_adjs_;
    std::vector<int> ref_, side_, stack_bottom_, lowpt_edge_;
    std::vector<int> left_ref_, right_ref_;
    std::vector<ConflictPair> stack_;
    int next_pair_id_ = 0;
};

}  // namespace

int CombinatorialEmbedding::face_count() const {
    int with_edges = 0;
    auto [comp, count] = connected_components(graph);
    std::vector<bool> has_edge(count, false);
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (graph.degree(v) > 0) has_edge[comp[v]] = true;
    for (bool b : has_edge) with_edges += b ? 1 : 0;
    return static_cast<int>(faces.size()) - with_edges + 1;
}

std::vector<std::vector<int>> trace_faces(const std::vector<std::vector<int>>& rotation) {
    detail::HalfEdgeEmbedding emb(rotation);
    std::vector<std::map<int, bool>> seen(rotation.size());
    std::vector<std::vector<int>> faces;
    for (int v = 0; v < static_cast<int>(rotation.size()); ++v) {
        for (int w : rotation[v]) {
            if (seen[v][w]) continue;
            std::vector<int> face;
            int a = v, b = w;
            while (!seen[a][b]) {
                seen[a][b] = true;
                face.push_back(a);
                std::tie(a, b) = emb.next_face_half_edge(a, b);
            }
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

bool is_planar_rotation(const SimpleGraph& graph, const std::vector<std::vector<int>>& rotation) {
    CombinatorialEmbedding ce{graph, rotation, trace_faces(rotation)};
    const int c = connected_components(graph).second;
    return graph.vertex_count() - graph.edge_count() + ce.face_count() == 1 + c;
}

bool is_planar(const SimpleGraph& graph) { return LRPlanarity(graph).run().has_value(); }

CombinatorialEmbedding planar_embedding(const SimpleGraph& graph) {
    auto emb = LRPlanarity(graph).run();
    if (!emb) throw NotPlanar("graph is not planar");
    CombinatorialEmbedding out{graph, emb->rotation(), {}};
    out.faces = trace_faces(out.rotation);
    return out;
}

}  // namespace simemb
