// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Every check compares library output against an independent oracle
// or a structural count.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cli_run.hpp"
#include "oracles.hpp"
#include "random_mrr.hpp"
#include "simemb/decide.hpp"
#include "simemb/embed.hpp"
#include "simemb/planarity.hpp"
#include "simemb/reduction.hpp"

using namespace simemb;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// A failed expectation inside a criterion.
struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

SimpleGraph random_graph(std::mt19937_64& rng, int n, double p) {
    SimpleGraph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Elements dropped into random cells of an a x b table of blocks; every row
// and column gets at least one element, and every cell does once n >= ab. Block graphs of these are often
// K3,3-like, which random pairs rarely produce.
PartitionPair random_table_pair(std::mt19937_64& rng, int a, int b, int n) {
    std::vector<ElementRecord> recs;
    const int seeded = n >= a * b ? a * b : std::max(a, b);
    for (int e = 0; e < n; ++e) {
        int i = static_cast<int>(rng() % a), j = static_cast<int>(rng() % b);
        if (e < seeded) {
            i = n >= a * b ? e / b : e % a;
            j = e % b;
        }
        recs.push_back({"u" + std::to_string(e), "A" + std::to_string(i), "B" + std::to_string(j)});
    }
    return pair_from_records(recs);
}

// Small pairs used by several criteria.
std::vector<PartitionPair> corpus(std::size_t want, int max_elements, std::size_t max_candidates) {
    std::vector<PartitionPair> out;
    for (std::uint64_t seed = 1; out.size() < want; ++seed) {
        const int n = 3 + static_cast<int>(seed % static_cast<std::uint64_t>(max_elements - 2));
        const int max_block = 2 + static_cast<int>(seed % 4);
        auto p = gen_random_pair(seed, n, max_block);
        if (candidate_edges(p).size() <= max_candidates) out.push_back(std::move(p));
    }
    return out;
}

std::string criterion_planarity() {
    // Every graph on up to 6 vertices, one bit per vertex pair.
    long long graphs = 0, planar = 0;
    for (int n = 1; n <= 6; ++n) {
        std::vector<Edge> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
        for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
            SimpleGraph g(n);
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1U) g.add_edge(pairs[i].first, pairs[i].second);
            const bool lr = is_planar(g);
            expect(lr == is_planar_bruteforce(g), "disagreement on a " + std::to_string(n) + "-vertex graph");
            ++graphs;
            planar += lr;
        }
    }
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 10000; ++trial) {
        const auto g = random_graph(rng, 7 + trial % 2, 0.25 + 0.05 * (trial % 10));
        const bool lr = is_planar(g);
        expect(lr == is_planar_bruteforce(g), "disagreement on random graph " + std::to_string(trial));
        ++graphs;
        planar += lr;
    }
    expect(!is_planar(complete_graph(5)), "K5 accepted");
    expect(!is_planar(subdivide_once(complete_bipartite_graph(3, 3))), "subdivided K3,3 accepted");
    return std::to_string(graphs) + " graphs, " + std::to_string(planar) + " planar";
}

std::string criterion_full() {
    expect(!decide_full(gen_all_pairs_instance(3, 3)), "all-pairs(3,3) reported fully embeddable");
    expect(decide_full(gen_all_pairs_instance(2, 2)), "all-pairs(2,2) reported not fully embeddable");
    int yes = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto p = gen_random_pair(seed, 1 + static_cast<int>(seed % 8), 1 + static_cast<int>(seed % 5));
        const bool expected = oracle::planar_by_rotations(bipartite_map(p).graph);
        expect(decide_full(p) == expected, "disagreement on random pair " + std::to_string(seed));
        yes += expected;
    }
    // Larger table pairs against the Kuratowski search on the block graph,
    // which is the bipartite map with its degree-2 element vertices smoothed.
    std::mt19937_64 rng(8);
    int table_no = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int a = 3 + trial % 3, b = 3 + (trial / 3) % 3;
        const auto p = random_table_pair(rng, a, b, std::max(a, b) + static_cast<int>(rng() % (a * b + 4)));
        const bool expected = is_planar_bruteforce(oracle::bipartite_map_skeleton(p));
        expect(decide_full(p) == expected, "disagreement on table pair " + std::to_string(trial));
        table_no += expected ? 0 : 1;
    }
    expect(table_no > 0, "no table pair without a full embedding");
    return "1000 random pairs (" + std::to_string(yes) + " fully embeddable), 300 table pairs (" +
           std::to_string(table_no) + " not)";
}

std::string criterion_strong() {
    auto pairs = corpus(180, 10, 22);
    std::mt19937_64 rng(3);
    while (pairs.size() < 240) {
        auto p = random_table_pair(rng, 3, 3, 9 + static_cast<int>(rng() % 2));
        if (candidate_edges(p).size() <= 22) pairs.push_back(std::move(p));
    }
    int yes = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        const auto d = decide_strong(p, -1);
        expect(d.verdict != Verdict::Unknown, "unbounded search returned unknown");
        const bool expected = decide_strong_bruteforce(p, 22);
        expect((d.verdict == Verdict::Yes) == expected, "disagreement on corpus pair " + std::to_string(i));
        const auto search = spanning_tree_search(p, -1);
        expect((search.verdict == Verdict::Yes) == expected, "tree search disagrees on pair " + std::to_string(i));
        if (d.verdict == Verdict::Yes) {
            ++yes;
            expect(d.witness.has_value(), "yes without a witness");
            expect(oracle::is_support(d.witness->graph, p), "witness is not a support");
            expect(is_planar(d.witness->graph), "witness is not planar");
        }
    }
    return std::to_string(pairs.size()) + " pairs, " + std::to_string(yes) + " strongly embeddable";
}

std::string criterion_hierarchy() {
    const auto a = classify(gen_all_pairs_instance(3, 3));
    expect(a.weak && a.strong.verdict == Verdict::Yes && !a.full, "all-pairs(3,3) misclassified");
    const auto t0 = Clock::now();
    const auto b = classify(gen_k5_subdivision_instance());
    const double elapsed = seconds_since(t0);
    expect(b.weak && b.strong.verdict == Verdict::No && !b.full, "K5 subdivision instance misclassified");
    expect(b.strong.certificate == Certificate::NonPlanarSubdivisionCore, "no subdivision certificate");
    expect(b.strong.core && b.strong.core->vertex_count() == 5 && b.strong.core->edges().size() == 10,
           "certificate core is not K5");
    expect(elapsed < 1.0, "certificate path took " + std::to_string(elapsed) + " s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "certificate in %.3f s", elapsed);
    return buf;
}

std::string criterion_weak() {
    auto pairs = corpus(150, 14, 1000);
    pairs.push_back(gen_k5_subdivision_instance());
    pairs.push_back(gen_all_pairs_instance(3, 3));
    for (const auto& p : pairs) {
        const auto v = validate_embedding(weak_embedding(p), EmbeddingLevel::Weak);
        expect(v.weak_ok(), "weak embedding failed validation");
    }
    std::mt19937_64 rng(77);
    int user_sets = 0;
    for (int n = 5; n <= 50; n += 5) {
        std::vector<Point> pts;
        while (static_cast<int>(pts.size()) < n) {
            pts.emplace_back(static_cast<long long>(rng() % 4000) - 2000, static_cast<long long>(rng() % 4000));
            try {
                require_general_position(pts);
            } catch (const CollinearPoints&) {
                pts.pop_back();
            }
        }
        const auto p = gen_random_pair(500 + static_cast<std::uint64_t>(n), n, 1 + n % 6);
        const auto v = validate_embedding(weak_embedding(p, pts), EmbeddingLevel::Weak);
        expect(v.weak_ok(), "weak embedding on a " + std::to_string(n) + "-point set failed validation");
        ++user_sets;
    }
    return std::to_string(pairs.size()) + " pairs, " + std::to_string(user_sets) + " user point sets up to 50";
}

std::string criterion_embeddings() {
    int strong = 0, full = 0, instances = 0;
    for (std::uint64_t seed = 0; seed < 160; ++seed) {
        const auto p = gen_random_pair(9000 + seed, 4 + static_cast<int>(seed % 14), 2 + static_cast<int>(seed % 3));
        ++instances;
        const auto d = decide_strong(p);
        if (d.verdict == Verdict::Yes) {
            const auto v = validate_embedding(strong_embedding(p, *d.witness), EmbeddingLevel::Strong);
            expect(v.strong_ok(), "strong embedding failed validation (seed " + std::to_string(seed) + ")");
            ++strong;
        }
        if (decide_full(p)) {
            const auto v = validate_embedding(full_embedding(p), EmbeddingLevel::Full);
            expect(v.full_ok(), "full embedding failed validation (seed " + std::to_string(seed) + ")");
            for (const auto& [key, count] : v.crossing_counts)
                expect(count == 0 || count == 2, "boundary pair crossing " + std::to_string(count) + " times");
            ++full;
        }
    }
    std::mt19937_64 rng(12);
    int strong_only = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = random_table_pair(rng, 3, 3, 9 + static_cast<int>(rng() % 3));
        ++instances;
        const auto d = decide_strong(p);
        if (d.verdict != Verdict::Yes) continue;
        const auto v = validate_embedding(strong_embedding(p, *d.witness), EmbeddingLevel::Strong);
        expect(v.strong_ok(), "strong embedding of table pair " + std::to_string(trial) + " failed validation");
        ++strong;
        if (!decide_full(p)) ++strong_only;
    }
    expect(strong_only > 0, "no strongly but not fully embeddable instance exercised");
    const auto grid = gen_all_pairs_instance(3, 3);
    expect(validate_embedding(strong_embedding(grid, *decide_strong(grid).witness), EmbeddingLevel::Strong).strong_ok(),
           "strong embedding of all-pairs(3,3) failed validation");
    expect(strong >= 100, "only " + std::to_string(strong) + " strong embeddings built");
    return std::to_string(instances) + " instances, " + std::to_string(strong) + " strong (" +
           std::to_string(strong_only) + " not full), " + std::to_string(full) + " full";
}

void check_reduction_structure(const ReductionOutput& red, const MRRInstance& mrr) {
    const auto& p = red.pair;
    const int m = red.m, n = red.n;
    expect(n == mrr.n_vars && red.clause_blocks.size() == mrr.clauses.size(), "grid parameters");
    expect(red.columns() == m * n + 1 && red.rows() == 2 * m + 2, "grid dimensions");
    // Each element lies in exactly one block of each partition.
    std::vector<int> seen(p.element_count(), 0);
    for (int q = 0; q < 2; ++q)
        for (const auto& b : p.blocks(q))
            for (int e : b.members) ++seen[e];
    for (int s : seen) expect(s == 2, "element not in exactly two blocks");
    const int cols = red.columns(), rows = red.rows();
    const int edges = rows * (cols - 1) + cols * (rows - 2) + (n + 1);
    expect(static_cast<int>(red.edge_chains.size()) == edges, "grid edge count");
    expect(static_cast<int>(red.vertex_blocks.size()) == cols * rows, "vertex block count");
    int fixing = 0;
    for (const auto& cb : red.clause_blocks) fixing += static_cast<int>(cb.links.size());
    expect(fixing == red.fixing_count(), "fixing element count");
    expect(p.element_count() == 5 * edges + fixing + static_cast<int>(red.home_elements.size()), "element count");
    expect(p.block_count() == cols * rows + 4 * edges + static_cast<int>(mrr.clauses.size()), "block count");
    for (std::size_t c = 0; c < red.clause_blocks.size(); ++c) {
        const auto& cb = red.clause_blocks[c];
        expect(cb.block.partition == (mrr.clauses[c].positive ? 0 : 1), "clause block partition");
        std::size_t homes = 0;
        for (const auto& [key, e] : red.home_elements)
            if (std::get<0>(key) == static_cast<int>(c) || std::get<1>(key) == static_cast<int>(c)) ++homes;
        expect(p.block(cb.block).members.size() == cb.links.size() + homes, "clause block size");
    }
}

std::string criterion_reduction() {
    for (int m = 1; m <= 4; ++m)
        for (int n = 2; n <= 6; ++n) {
            const auto red = base_grid(m, n);
            expect(red.m == m && red.columns() == m * n + 1 && red.rows() == 2 * m + 2, "base grid dimensions");
            check_reduction_structure(red, red.mrr);
        }
    std::mt19937_64 rng(4);
    int solved = 0, tried = 0;
    for (int trial = 0; solved < 30 && trial < 5000; ++trial) {
        const int n = 3 + trial % 4;
        const auto mrr = oracle::random_mrr(rng, n, 1 + trial % 4);
        const auto model = oracle::first_model(mrr);
        if (!model) continue;
        ++tried;
        ReductionOutput red;
        try {
            red = reduce(mrr);
        } catch (const InconsistentMRR&) {
            continue;
        }
        check_reduction_structure(red, mrr);
        const auto a = brute_force_sat(mrr);
        expect(a.has_value() && a->values == model->values, "brute_force_sat disagrees with enumeration");
        const auto s = canonical_support(red, *a);
        expect(oracle::is_support(s.graph, red.pair), "canonical support is not a support");
        expect(is_planar(s.graph), "canonical support is not planar");
        ++solved;
    }
    expect(solved >= 20, "only " + std::to_string(solved) + " instances reduced");
    return std::to_string(solved) + " satisfiable formulas (" + std::to_string(tried) + " drawn)";
}

std::string criterion_determinism() {
    const auto dir = oracle::scratch_dir("acceptance");
    auto q = [](const std::filesystem::path& p) { return "\"" + p.string() + "\""; };
    std::vector<std::string> outputs[2];
    for (int round = 0; round < 2; ++round) {
        // Same paths both rounds: reports echo the input path.
        const auto r = dir / "run";
        std::filesystem::remove_all(r);
        std::filesystem::create_directories(r);
        const std::vector<std::string> commands{
            "gen --example random --seed 42 -n 14 --max-block 4 --out " + q(r / "random.pair"),
            "gen --example base-grid -m 2 -n 3 --out " + q(r / "grid.pair"),
            "analyze " + oracle::data_arg("k33_table.pair") + " --budget 100000",
            "embed " + q(r / "random.pair") + " --class weak --out " + q(r / "weak.svg"),
            "embed " + oracle::data_arg("k33_table.pair") + " --class strong --budget 100000 --out " + q(r / "strong.svg"),
            "embed " + oracle::data_arg("onepair.pair") + " --class full --out " + q(r / "full.svg"),
            "reduce " + oracle::data_arg("two_clauses.mrr") + " --assignment auto --out " + q(r / "red.pair") +
                " --support-out " + q(r / "support.graph"),
        };
        for (const auto& c : commands) {
            const auto res = oracle::run_cli(c, r);
            expect(res.status == 0, "command failed: simemb " + c);
            if (c.rfind("analyze", 0) == 0 || c.rfind("reduce", 0) == 0) outputs[round].push_back(res.out);
        }
        for (const char* f : {"random.pair", "grid.pair", "weak.svg", "weak.report.txt", "strong.svg",
                              "strong.report.txt", "full.svg", "full.report.txt", "red.pair", "support.graph"}) {
            const auto text = oracle::slurp(r / f);
            expect(!text.empty(), std::string("missing output ") + f);
            outputs[round].push_back(text);
        }
    }
    expect(outputs[0] == outputs[1], "outputs differ between runs");
    return std::to_string(outputs[0].size()) + " outputs byte-identical across two runs";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        {"planarity test agrees with the Kuratowski oracle", criterion_planarity},
        {"full embeddability matches bipartite-map planarity", criterion_full},
        {"strong decision matches subset enumeration", criterion_strong},
        {"hierarchy strictness instances", criterion_hierarchy},
        {"weak embeddings validate", criterion_weak},
        {"strong and full embeddings validate", criterion_embeddings},
        {"reduction yields planar canonical supports", criterion_reduction},
        {"command-line output is deterministic", criterion_determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = criteria[i].second();
        } catch (const Failure& f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        failed += ok ? 0 : 1;
        std::printf("%s criterion %zu: %s (%s; %.1f s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    detail.c_str(), seconds_since(t0));
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
