#include <doctest.h>

#include <sstream>

#include "simemb/io.hpp"

using namespace simemb;

namespace {

std::string data(const std::string& name) { return std::string(SIMEMB_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("pair files round-trip") {
    for (const auto& p : {gen_all_pairs_instance(3, 3), gen_k5_subdivision_instance(), gen_random_pair(9, 30, 5)}) {
        std::stringstream ss;
        write_pair(ss, p);
        CHECK(read_pair(ss) == p);
    }
    const auto one = read_pair_file(data("onepair.pair"));
    CHECK(one.element_count() == 1);
    CHECK(one.block_count() == 2);
}

TEST_CASE("the written pair starts with a summary comment") {
    std::ostringstream ss;
    write_pair(ss, gen_all_pairs_instance(2, 3));
    CHECK(ss.str().rfind("# 6 elements, 2 + 3 blocks\n", 0) == 0);
}

TEST_CASE("pair file errors") {
    try {
        read_pair_file(data("missing_assignment.pair"));
        FAIL("expected a ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.has(DiagnosticKind::MissingAssignment));
    }
    try {
        read_pair_file(data("bad_keyword.pair"));
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    std::istringstream too_many("element a X Y Z\n");
    CHECK_THROWS_AS(read_pair(too_many), ParseError);
    CHECK_THROWS_AS(read_pair_file(data("does_not_exist.pair")), Error);
}

TEST_CASE("graph files round-trip") {
    auto g = grid_graph(3, 4);
    std::stringstream ss;
    write_graph(ss, g);
    CHECK(read_graph(ss) == g);
    std::istringstream bad("v a\ne a b\n");
    CHECK_THROWS_AS(read_graph(bad), ParseError);
    std::istringstream loop("v a\ne a a\n");
    CHECK_THROWS_AS(read_graph(loop), ParseError);
}

TEST_CASE("MRR files round-trip with 1-based clause numbers") {
    const auto mrr = read_mrr_file(data("nested.mrr"));
    CHECK(mrr.n_vars == 5);
    REQUIRE(mrr.clauses.size() == 3);
    CHECK_FALSE(mrr.clauses[2].positive);
    CHECK(mrr.nesting.at(true) == std::vector<int>{0, 1});
    CHECK(mrr.leg_order.at({2, true}) == std::vector<int>{0, 1});
    std::stringstream ss;
    write_mrr(ss, mrr);
    const auto again = read_mrr(ss);
    CHECK(again.n_vars == mrr.n_vars);
    CHECK(again.nesting == mrr.nesting);
    CHECK(again.leg_order == mrr.leg_order);
    CHECK(again.clauses.size() == mrr.clauses.size());
}

TEST_CASE("MRR parse errors") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_mrr(in);
    };
    CHECK_THROWS_AS(parse("clause pos 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse("mrr 3\nclause pos 1 2 4\n"), ParseError);
    CHECK_THROWS_AS(parse("mrr 3\nclause maybe 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse("mrr 3\nclause pos 1 2 3\nnesting pos 2\n"), ParseError);
    CHECK_THROWS_AS(parse("mrr 3\nclause pos 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("rationals and point files") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-7/14") == Rational(-1, 2));
    CHECK(parse_rational("2.5") == Rational(5, 2));
    CHECK(parse_rational("-0.125") == Rational(-1, 8));
    CHECK(parse_rational("+4") == 4);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational("1.2.3"), Error);
    const auto pts = read_points_file(data("points6.txt"));
    REQUIRE(pts.size() == 6);
    CHECK(pts[1] == Point(Rational(3), Rational(1, 2)));
    CHECK(pts[4].x == Rational(5, 2));
    std::istringstream bad("1 2\n3\n");
    CHECK_THROWS_AS(read_points(bad), ParseError);
}

TEST_CASE("assignments") {
    CHECK(parse_assignment("TF1 0,t").values == std::vector<bool>{true, false, true, false, true});
    CHECK(format_assignment(parse_assignment("tft")) == "TFT");
    CHECK_THROWS_AS(parse_assignment("TX"), Error);
}

TEST_CASE("reports keep insertion order") {
    Report r;
    r.add("b", "x");
    r.add("a", 3);
    CHECK(r.text() == "b: x\na: 3\n");
}
