// simemb: command-line front end.
//
//   simemb analyze PAIR [--budget N]
//   simemb embed PAIR --class weak|strong|full --out FILE.svg [--points FILE] [--budget N]
//   simemb gen --example all-pairs|k5sub|random|base-grid [params] [--out FILE]
//   simemb reduce MRR --out PAIR [--assignment T/F...|auto] [--support-out FILE]
//
// Exit codes: 0 success, 2 input error, 3 class not achievable, 4 assignment
// does not satisfy the formula.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "simemb/decide.hpp"
#include "simemb/embed.hpp"
#include "simemb/io.hpp"
#include "simemb/planarity.hpp"
#include "simemb/reduction.hpp"
#include "simemb/svg.hpp"

using namespace simemb;

namespace {

constexpr int kInputError = 2;
constexpr int kNotAchievable = 3;
constexpr int kAssignmentError = 4;

struct NotAchievable : Error {
    using Error::Error;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") std::cout << text;
    else write_file(path, text);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string core_kind(const SimpleGraph& core) {
    const int n = core.vertex_count();
    const auto edges = static_cast<int>(core.edges().size());
    if (n == 5 && edges == 10) return " K5";
    if (n == 6 && edges == 9 && !is_planar(core)) return " K3,3";
    if (n <= 12) {
        if (auto w = find_kuratowski_subdivision(core)) return w->k5 ? " containing a K5 subdivision" : " containing a K3,3 subdivision";
    }
    return "";
}

std::string describe_strong(const StrongDecision& d) {
    switch (d.verdict) {
        case Verdict::Yes:
            return "yes (witness: " + std::to_string(d.witness->graph.edges().size()) + "-edge support)";
        case Verdict::No:
            if (d.certificate == Certificate::NonPlanarSubdivisionCore)
                return "no (certificate: non-planar subdivision core" + core_kind(*d.core) + ")";
            return "no (certificate: exhausted search)";
        case Verdict::Unknown:
            return "unknown (budget exhausted after " + std::to_string(d.budget_spent) + " planarity tests)";
    }
    return "unknown";
}

int cmd_analyze(const std::string& path, std::int64_t budget) {
    const PartitionPair pair = read_pair_file(path);
    const HierarchyReport h = classify(pair, budget);
    const BipartiteMap bm = bipartite_map(pair);
    Report r;
    r.add("file", path);
    r.add("elements", pair.element_count());
    r.add("blocks", std::to_string(pair.block_count(0)) + " + " + std::to_string(pair.block_count(1)));
    r.add("bipartite_map", std::to_string(bm.graph.vertex_count()) + " vertices, " +
                               std::to_string(bm.graph.edges().size()) + " edges");
    r.add("weak", yes_no(h.weak));
    r.add("strong", describe_strong(h.strong));
    r.add("full", yes_no(h.full) + (h.full ? "" : " (bipartite map non-planar)"));
    r.add("planarity_tests", h.strong.budget_spent);
    std::cout << r.text();
    return 0;
}

std::string report_path(const std::string& svg_path) {
    const auto dot = svg_path.rfind('.');
    const auto slash = svg_path.rfind('/');
    const std::string stem =
        (dot != std::string::npos && (slash == std::string::npos || dot > slash)) ? svg_path.substr(0, dot) : svg_path;
    return stem + ".report.txt";
}

int cmd_embed(const std::string& path, const std::string& level_name, const std::string& out_path,
              const std::string& points_path, std::int64_t budget) {
    const PartitionPair pair = read_pair_file(path);
    EmbeddingArtifact art;
    EmbeddingLevel level;
    if (level_name == "weak") {
        level = EmbeddingLevel::Weak;
        std::optional<std::vector<Point>> pts;
        if (!points_path.empty()) pts = read_points_file(points_path);
        art = weak_embedding(pair, pts);
    } else {
        if (!points_path.empty()) throw Error("--points is only supported with --class weak");
        if (level_name == "strong") {
            level = EmbeddingLevel::Strong;
            const StrongDecision d = decide_strong(pair, budget);
            if (d.verdict != Verdict::Yes) throw NotAchievable("strong embedding not achievable: " + describe_strong(d));
            art = strong_embedding(pair, *d.witness);
        } else {
            level = EmbeddingLevel::Full;
            if (!decide_full(pair)) throw NotAchievable("full embedding not achievable: bipartite map non-planar");
            art = full_embedding(pair);
        }
    }
    const ValidationReport v = validate_embedding(art, level);
    write_file(out_path, render_svg(art));

    Report r;
    r.add("file", path);
    r.add("class", std::string(to_string(level)));
    r.add("elements", pair.element_count());
    r.add("regions", static_cast<long long>(art.regions.size()));
    r.add("membership", yes_no(v.membership_ok));
    r.add("same_partition_disjoint", yes_no(v.same_partition_disjoint));
    if (level != EmbeddingLevel::Weak) {
        r.add("intersections_contain_elements", yes_no(v.intersecting_pairs_share_element));
        r.add("disjoint_blocks_disjoint", yes_no(v.disjoint_blocks_disjoint));
        int worst = 0;
        for (const auto& [key, count] : v.crossing_counts) worst = std::max(worst, count);
        r.add("max_boundary_crossings", worst);
    }
    if (level == EmbeddingLevel::Full) r.add("pseudo_disks", yes_no(v.pseudo_disk_ok));
    r.add("valid", yes_no(v.passes(level)));
    if (!v.note.empty()) r.add("note", v.note);
    write_file(report_path(out_path), r.text());
    std::cout << "wrote " << out_path << " and " << report_path(out_path) << "\n";
    return 0;
}

struct GenOptions {
    std::string example;
    int a = 3, b = 3, m = 2, n = 10, max_block = 3;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_gen(const GenOptions& o) {
    PartitionPair pair = [&] {
        if (o.example == "all-pairs") return gen_all_pairs_instance(o.a, o.b);
        if (o.example == "k5sub") return gen_k5_subdivision_instance();
        if (o.example == "random") return gen_random_pair(o.seed, o.n, o.max_block);
        return base_grid(o.m, o.n).pair;
    }();
    std::ostringstream ss;
    write_pair(ss, pair);
    emit(o.out, ss.str());
    return 0;
}

int cmd_reduce(const std::string& path, const std::string& out_path, const std::string& assignment,
               const std::string& support_out) {
    const MRRInstance mrr = read_mrr_file(path);
    const ReductionOutput red = reduce(mrr);
    std::ostringstream ss;
    write_pair(ss, red.pair);
    emit(out_path, ss.str());

    Report r;
    r.add("file", path);
    r.add("clauses", red.m);
    r.add("variables", red.n);
    r.add("grid", std::to_string(red.columns()) + " columns x " + std::to_string(red.rows()) + " rows");
    r.add("grid_edges", static_cast<long long>(red.edge_chains.size()));
    r.add("elements", red.pair.element_count());
    r.add("blocks", std::to_string(red.pair.block_count(0)) + " + " + std::to_string(red.pair.block_count(1)));
    r.add("fixing_elements", red.fixing_count());
    r.add("home_elements", static_cast<long long>(red.home_elements.size()));
    if (!assignment.empty()) {
        Assignment a;
        if (assignment == "auto") {
            auto found = brute_force_sat(mrr);
            if (!found) throw AssignmentDoesNotSatisfy("formula is unsatisfiable");
            a = *found;
        } else {
            a = parse_assignment(assignment);
        }
        const SupportGraph s = canonical_support(red, a);
        r.add("assignment", format_assignment(a));
        r.add("support_edges", static_cast<long long>(s.graph.edges().size()));
        r.add("support", "planar support verified");
        if (!support_out.empty()) {
            std::ostringstream gs;
            write_graph(gs, s.graph);
            write_file(support_out, gs.str());
        }
    }
    // Keep stdout clean for the pair when it is written there.
    (out_path.empty() || out_path == "-" ? std::cerr : std::cout) << r.text();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simultaneous embeddings of two partitions"};
    app.require_subcommand(1);

    std::string pair_path, out_path, points_path, level = "weak", mrr_path, assignment, support_out;
    std::int64_t budget = kDefaultBudget;

    auto* analyze = app.add_subcommand("analyze", "decide weak, strong and full embeddability");
    analyze->add_option("pair", pair_path, "pair file")->required();
    analyze->add_option("--budget", budget, "planarity-test budget for the strong search");

    auto* embed = app.add_subcommand("embed", "construct an embedding and write it as SVG");
    embed->add_option("pair", pair_path, "pair file")->required();
    embed->add_option("--class", level, "weak, strong or full")->check(CLI::IsMember({"weak", "strong", "full"}));
    embed->add_option("--out", out_path, "SVG output path")->required();
    embed->add_option("--points", points_path, "point set for the weak embedding");
    embed->add_option("--budget", budget, "planarity-test budget for the strong search");

    GenOptions gen_opts;
    auto* gen = app.add_subcommand("gen", "write a generated pair file");
    gen->add_option("--example", gen_opts.example, "all-pairs, k5sub, random or base-grid")
        ->required()
        ->check(CLI::IsMember({"all-pairs", "k5sub", "random", "base-grid"}));
    gen->add_option("-a", gen_opts.a, "all-pairs: blocks in partition 0");
    gen->add_option("-b", gen_opts.b, "all-pairs: blocks in partition 1");
    gen->add_option("-m", gen_opts.m, "base-grid: number of clauses");
    gen->add_option("-n", gen_opts.n, "random: elements; base-grid: variables");
    gen->add_option("--max-block", gen_opts.max_block, "random: largest block size");
    gen->add_option("--seed", gen_opts.seed, "random: seed");
    gen->add_option("--out", gen_opts.out, "output path (stdout if omitted)");

    auto* red = app.add_subcommand("reduce", "build the pair for a monotone rectilinear 3SAT layout");
    red->add_option("mrr", mrr_path, "MRR file")->required();
    red->add_option("--out", out_path, "pair output path (stdout if omitted)");
    red->add_option("--assignment", assignment, "T/F per variable, or 'auto' to search");
    red->add_option("--support-out", support_out, "write the canonical support graph here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(pair_path, budget);
        if (*embed) return cmd_embed(pair_path, level, out_path, points_path, budget);
        if (*gen) return cmd_gen(gen_opts);
        if (*red) return cmd_reduce(mrr_path, out_path, assignment, support_out);
    } catch (const ValidationError& e) {
        std::cerr << "error: invalid pair\n";
        for (const auto& d : e.diagnostics()) std::cerr << "  " << d.message() << "\n";
        return kInputError;
    } catch (const NotAchievable& e) {
        std::cerr << e.what() << "\n";
        return kNotAchievable;
    } catch (const AssignmentDoesNotSatisfy& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kAssignmentError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return 0;
}
