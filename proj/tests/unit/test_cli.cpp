#include <doctest.h>

#include "cli_run.hpp"
#include "simemb/io.hpp"

using oracle::run_cli;
using oracle::slurp;

namespace {

std::string data(const std::string& name) { return oracle::data_arg(name); }

std::string quoted(const std::filesystem::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_CASE("analyze reports the hierarchy for both strictness instances") {
    const auto dir = oracle::scratch_dir("analyze");
    const auto a = run_cli("analyze " + data("k33_table.pair"), dir);
    CHECK(a.status == 0);
    CHECK(a.out.find("weak: yes\n") != std::string::npos);
    CHECK(a.out.find("strong: yes (witness:") != std::string::npos);
    CHECK(a.out.find("full: no (bipartite map non-planar)\n") != std::string::npos);
    const auto b = run_cli("analyze " + data("k5_subdivision.pair"), dir);
    CHECK(b.status == 0);
    CHECK(b.out.find("strong: no (certificate: non-planar subdivision core K5)\n") != std::string::npos);
    const auto one = run_cli("analyze " + data("onepair.pair"), dir);
    CHECK(one.out.find("full: yes\n") != std::string::npos);
}

TEST_CASE("input errors exit with status 2") {
    const auto dir = oracle::scratch_dir("errors");
    const auto missing = run_cli("analyze " + data("missing_assignment.pair"), dir);
    CHECK(missing.status == 2);
    CHECK(missing.err.find("error: invalid pair") != std::string::npos);
    CHECK(run_cli("analyze " + data("bad_keyword.pair"), dir).status == 2);
    CHECK(run_cli("analyze " + data("nonexistent.pair"), dir).status == 2);
    CHECK(run_cli("reduce " + data("crossing.mrr"), dir).status == 2);
}

TEST_CASE("embed writes an SVG and a report, or exits 3") {
    const auto dir = oracle::scratch_dir("embed");
    const auto svg = dir / "a.svg";
    const auto r = run_cli("embed " + data("k33_table.pair") + " --class strong --out " + quoted(svg), dir);
    CHECK(r.status == 0);
    CHECK(slurp(svg).find("</svg>") != std::string::npos);
    CHECK(slurp(dir / "a.report.txt").find("valid: yes\n") != std::string::npos);
    CHECK(run_cli("embed " + data("k33_table.pair") + " --class full --out " + quoted(svg), dir).status == 3);
    CHECK(run_cli("embed " + data("k5_subdivision.pair") + " --class strong --out " + quoted(svg), dir).status == 3);
    // onepair has one element but the point file holds six points.
    const auto weak =
        run_cli("embed " + data("onepair.pair") + " --class weak --points " + data("points6.txt") + " --out " + quoted(svg),
                dir);
    CHECK(weak.status == 2);
}

TEST_CASE("gen output parses back to the generated pair") {
    const auto dir = oracle::scratch_dir("gen");
    const auto r = run_cli("gen --example random --seed 42 -n 12 --max-block 4", dir);
    CHECK(r.status == 0);
    std::istringstream in(r.out);
    CHECK(simemb::read_pair(in) == simemb::gen_random_pair(42, 12, 4));
    const auto k5 = run_cli("gen --example k5sub", dir);
    std::istringstream kin(k5.out);
    CHECK(simemb::read_pair(kin) == simemb::gen_k5_subdivision_instance());
}

TEST_CASE("reduce checks the assignment") {
    const auto dir = oracle::scratch_dir("reduce");
    const auto out = quoted(dir / "r.pair");
    const auto ok = run_cli("reduce " + data("one_clause.mrr") + " --out " + out + " --assignment TFF", dir);
    CHECK(ok.status == 0);
    CHECK(ok.out.find("support: planar support verified\n") != std::string::npos);
    const auto found = run_cli("reduce " + data("two_clauses.mrr") + " --out " + out + " --assignment auto", dir);
    CHECK(found.out.find("assignment: FFT\n") != std::string::npos);
    CHECK(run_cli("reduce " + data("one_clause.mrr") + " --out " + out + " --assignment FFF", dir).status == 4);
}

TEST_CASE("identical invocations give identical bytes") {
    const auto dir = oracle::scratch_dir("determinism");
    for (int round = 0; round < 2; ++round) {
        const auto tag = std::to_string(round);
        run_cli("gen --example random --seed 7 -n 14 --out " + quoted(dir / ("g" + tag + ".pair")), dir);
        run_cli("embed " + quoted(dir / ("g" + tag + ".pair")) + " --class weak --out " +
                    quoted(dir / ("w" + tag + ".svg")),
                dir);
    }
    CHECK(slurp(dir / "g0.pair") == slurp(dir / "g1.pair"));
    CHECK(slurp(dir / "w0.svg") == slurp(dir / "w1.svg"));
    CHECK_FALSE(slurp(dir / "w0.svg").empty());
}
