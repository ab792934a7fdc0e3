#include "simemb/decide.hpp"

#include <algorithm>
#include <map>

#include "simemb/planarity.hpp"

namespace simemb {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

std::string_view to_string(Certificate c) {
    switch (c) {
        case Certificate::None: return "none";
        case Certificate::ExhaustedSearch: return "exhausted search";
        case Certificate::NonPlanarSubdivisionCore: return "non-planar subdivision core";
    }
    return "?";
}

bool decide_weak(const PartitionPair&) { return true; }

bool decide_full(const PartitionPair& pair) { return is_planar(bipartite_map(pair).graph); }

std::optional<SimpleGraph> subdivision_negative_certificate(const PartitionPair& pair) {
    const auto big = block_intersection_graph(pair).graph;
    for (int side = 0; side < 2; ++side) {
        const int other = 1 - side;
        bool all_two = pair.block_count(side) > 0;
        for (int i = 0; i < pair.block_count(side) && all_two; ++i)
            all_two = big.degree(pair.flat_index({side, i})) == 2;
        if (!all_two) continue;

        SimpleGraph core;
        for (const auto& b : pair.blocks(other)) core.add_vertex(b.name);
        for (int i = 0; i < pair.block_count(side); ++i) {
            const auto& nb = big.neighbors(pair.flat_index({side, i}));
            core.add_edge(pair.from_flat_index(nb[0]).index, pair.from_flat_index(nb[1]).index);
        }
        if (!is_planar(core)) return core;
    }
    return std::nullopt;
}

std::optional<SupportGraph> support_from_bipartite_map(const PartitionPair& pair) {
    const auto bm = bipartite_map(pair);
    if (!is_planar(bm.graph)) return std::nullopt;
    const auto emb = planar_embedding(bm.graph);
    SupportGraph support = empty_support(pair);
    for (BlockRef b : pair.all_blocks()) {
        const auto& around = emb.rotation[bm.block_vertex(pair, b)];
        for (std::size_t i = 0; i + 1 < around.size(); ++i) support.graph.add_edge(around[i], around[i + 1]);
    }
    return support;
}

namespace {

// Tree on {0..k-1} encoded by a Prüfer sequence.
std::vector<Edge> decode_pruefer(const std::vector<int>& seq, int k) {
    std::vector<Edge> edges;
    if (k == 2) return {{0, 1}};
    if (k < 2) return edges;
    std::vector<int> degree(k, 1);
    for (int x : seq) ++degree[x];
    for (int x : seq) {
        for (int leaf = 0; leaf < k; ++leaf) {
            if (degree[leaf] == 1) {
                edges.push_back(make_edge(leaf, x));
                --degree[leaf];
                --degree[x];
                break;
            }
        }
    }
    int u = -1;
    for (int v = 0; v < k; ++v) {
        if (degree[v] == 1) {
            if (u < 0) {
                u = v;
            } else {
                edges.push_back(make_edge(u, v));
            }
        }
    }
    return edges;
}

bool next_sequence(std::vector<int>& seq, int k) {
    for (int i = static_cast<int>(seq.size()) - 1; i >= 0; --i) {
        if (++seq[i] < k) return true;
        seq[i] = 0;
    }
    return false;
}

class TreeSearch {
public:
    TreeSearch(const PartitionPair& pair, std::int64_t budget) : pair_(pair), budget_(budget), union_(pair.elements()) {
        for (BlockRef b : pair.all_blocks())
            if (pair.block(b).members.size() > 2) {
                large_.push_back(b);
            } else if (pair.block(b).members.size() == 2) {
                const auto& m = pair.block(b).members;
                add(make_edge(m[0], m[1]));
            }
        std::stable_sort(large_.begin(), large_.end(), [&](BlockRef a, BlockRef b) {
            return pair.block(a).members.size() > pair.block(b).members.size();
        });
    }

    StrongDecision run() {
        StrongDecision d;
        if (!test()) {
            d.verdict = exhausted_ ? Verdict::Unknown : Verdict::No;
        } else {
            const int result = search(0);
            d.verdict = result > 0 ? Verdict::Yes : (result < 0 ? Verdict::Unknown : Verdict::No);
        }
        if (d.verdict == Verdict::Yes) d.witness = SupportGraph{union_};
        if (d.verdict == Verdict::No) d.certificate = Certificate::ExhaustedSearch;
        d.budget_spent = spent_;
        return d;
    }

private:
    void add(Edge e) {
        if (count_[e]++ == 0) union_.add_edge(e.first, e.second);
    }
    void remove(Edge e) {
        if (--count_[e] == 0) union_.remove_edge(e.first, e.second);
    }

    // False when the union is non-planar or the budget ran out.
    bool test() {
        if (budget_ >= 0 && spent_ >= budget_) {
            exhausted_ = true;
            return false;
        }
        ++spent_;
        return is_planar(union_);
    }

    // 1 found, 0 exhausted, -1 budget exceeded.
    int search(std::size_t depth) {
        if (depth == large_.size()) return 1;
        const auto& members = pair_.block(large_[depth]).members;
        const int k = static_cast<int>(members.size());
        std::vector<int> seq(k - 2, 0);
        do {
            std::vector<Edge> tree;
            for (auto [a, b] : decode_pruefer(seq, k)) tree.push_back(make_edge(members[a], members[b]));
            for (Edge e : tree) add(e);
            if (test()) {
                const int r = search(depth + 1);
                if (r > 0) return r;
                if (r < 0) {
                    for (Edge e : tree) remove(e);
                    return r;
                }
            } else if (exhausted_) {
                for (Edge e : tree) remove(e);
                return -1;
            }
            for (Edge e : tree) remove(e);
        } while (next_sequence(seq, k));
        return 0;
    }

    const PartitionPair& pair_;
    std::int64_t budget_;
    std::int64_t spent_ = 0;
    bool exhausted_ = false;
    SimpleGraph union_;
    std::map<Edge, int> count_;
    std::vector<BlockRef> large_;
};

}  // namespace

StrongDecision spanning_tree_search(const PartitionPair& pair, std::int64_t budget) {
    auto d = TreeSearch(pair, budget).run();
    if (d.witness && !(is_support(d.witness->graph, pair) && is_planar(d.witness->graph)))
        throw Error("internal error: spanning-tree witness failed re-validation");
    return d;
}

StrongDecision decide_strong(const PartitionPair& pair, std::int64_t budget) {
    if (auto core = subdivision_negative_certificate(pair)) {
        StrongDecision d;
        d.verdict = Verdict::No;
        d.certificate = Certificate::NonPlanarSubdivisionCore;
        d.core = std::move(core);
        return d;
    }
    if (auto support = support_from_bipartite_map(pair)) {
        if (is_support(support->graph, pair) && is_planar(support->graph)) {
            StrongDecision d;
            d.verdict = Verdict::Yes;
            d.witness = std::move(support);
            d.budget_spent = 1;
            return d;
        }
    }
    return spanning_tree_search(pair, budget);
}

bool decide_strong_bruteforce(const PartitionPair& pair, int max_edges) {
    const auto cands = candidate_edges(pair);
    const int m = static_cast<int>(cands.size());
    if (m > max_edges) throw TooLarge("too many candidate edges for brute force: " + std::to_string(m));

    const int n = pair.element_count();
    // Per block: its members and the candidate edges inside it.
    struct BlockMask {
        std::vector<int> members;
        std::vector<std::pair<int, Edge>> edges;  // candidate index, local endpoints
    };
    std::vector<BlockMask> blocks;
    for (BlockRef b : pair.all_blocks()) {
        BlockMask bm;
        bm.members = pair.block(b).members;
        if (bm.members.size() < 2) continue;
        for (int i = 0; i < m; ++i) {
            auto a = std::find(bm.members.begin(), bm.members.end(), cands[i].first);
            auto c = std::find(bm.members.begin(), bm.members.end(), cands[i].second);
            if (a != bm.members.end() && c != bm.members.end())
                bm.edges.push_back({i, {static_cast<int>(a - bm.members.begin()), static_cast<int>(c - bm.members.begin())}});
        }
        blocks.push_back(std::move(bm));
    }

    auto connected = [](const BlockMask& bm, std::uint32_t subset) {
        const int k = static_cast<int>(bm.members.size());
        std::uint32_t reached = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& [idx, e] : bm.edges) {
                if (!(subset >> idx & 1U)) continue;
                const bool a = reached >> e.first & 1U, b = reached >> e.second & 1U;
                if (a != b) {
                    reached |= (1U << e.first) | (1U << e.second);
                    grew = true;
                }
            }
        }
        return reached == (k == 32 ? ~0U : (1U << k) - 1U);
    };

    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t subset = 0; subset < total; ++subset) {
        const auto s = static_cast<std::uint32_t>(subset);
        bool ok = true;
        for (const auto& bm : blocks)
            if (!connected(bm, s)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        SimpleGraph g(n);
        for (int i = 0; i < m; ++i)
            if (s >> i & 1U) g.add_edge(cands[i].first, cands[i].second);
        if (is_planar(g)) return true;
    }
    return false;
}

HierarchyReport classify(const PartitionPair& pair, std::int64_t budget) {
    HierarchyReport r;
    r.weak = decide_weak(pair);
    r.full = decide_full(pair);
    r.strong = decide_strong(pair, budget);
    return r;
}

}  // namespace simemb
