#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockcodes/families.hpp"
#include "support.hpp"

using namespace blockcodes;
using namespace testing;

namespace {

ParseErrorKind error_kind(const std::string& text, GraphFormat f) {
    try {
        parse_graph(text, f);
    } catch (const ParseError& e) {
        return e.kind();
    }
    FAIL("no parse error for " << text);
    return ParseErrorKind::MalformedHeader;
}

}  // namespace

TEST_CASE("edge list examples") {
    CHECK(parse_graph("2 1\n0 1\n", GraphFormat::EdgeList) == path(2));
    CHECK(parse_graph("3 3\n0 1\n1 2\n0 2\n", GraphFormat::EdgeList) == clique(3));
    CHECK(parse_graph("3 0", GraphFormat::EdgeList) == Graph(3));
    CHECK(emit_graph(clique(3), GraphFormat::EdgeList) == "3 3\n0 1\n0 2\n1 2\n");
    CHECK(parse_graph("4 3\n3 2\n\n1 0\n2 1\n", GraphFormat::EdgeList) == path(4));
}

TEST_CASE("graph6 examples") {
    CHECK(parse_graph("A_", GraphFormat::Graph6) == path(2));
    CHECK(parse_graph("A?", GraphFormat::Graph6) == Graph(2));
    CHECK(parse_graph("Bw", GraphFormat::Graph6) == clique(3));
    CHECK(parse_graph("Bg", GraphFormat::Graph6) == p3());
    CHECK(parse_graph("C~", GraphFormat::Graph6) == clique(4));
    CHECK(parse_graph(">>graph6<<A_\n", GraphFormat::Graph6) == path(2));
    CHECK(emit_graph(path(2), GraphFormat::Graph6) == "A_");
    CHECK(emit_graph(p3(), GraphFormat::Graph6) == "Bg");
    CHECK(emit_graph(Graph(1), GraphFormat::Graph6) == "@");
    CHECK(emit_graph(Graph(0), GraphFormat::Graph6) == "?");
    CHECK(emit_graph(Graph(62), GraphFormat::Graph6).front() == '}');
    CHECK(emit_graph(Graph(64), GraphFormat::Graph6).substr(0, 4) == "~?@?");
}

TEST_CASE("round trips") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
        const int n = t < 250 ? t % 25 : 60 + t % 5;
        const Graph g = random_graph(n, 0.3, rng);
        for (GraphFormat f : {GraphFormat::Graph6, GraphFormat::EdgeList}) {
            const std::string text = emit_graph(g, f);
            REQUIRE(parse_graph(text, f) == g);
            REQUIRE(emit_graph(parse_graph(text, f), f) == text);
            REQUIRE(detect_format(text) == f);
        }
    }
}

TEST_CASE("parse errors are distinct") {
    CHECK(error_kind("", GraphFormat::EdgeList) == ParseErrorKind::MalformedHeader);
    CHECK(error_kind("2\n0 1\n", GraphFormat::EdgeList) == ParseErrorKind::MalformedHeader);
    CHECK(error_kind("x y\n", GraphFormat::EdgeList) == ParseErrorKind::MalformedHeader);
    CHECK(error_kind("2 2\n0 1\n", GraphFormat::EdgeList) == ParseErrorKind::MalformedBody);
    CHECK(error_kind("2 1\n0\n", GraphFormat::EdgeList) == ParseErrorKind::MalformedBody);
    CHECK(error_kind("2 1\n0 2\n", GraphFormat::EdgeList) == ParseErrorKind::VertexOutOfRange);
    CHECK(error_kind("2 1\n-1 0\n", GraphFormat::EdgeList) == ParseErrorKind::VertexOutOfRange);
    CHECK(error_kind("3 2\n0 1\n1 0\n", GraphFormat::EdgeList) == ParseErrorKind::DuplicateEdge);
    CHECK(error_kind("2 1\n1 1\n", GraphFormat::EdgeList) == ParseErrorKind::SelfLoop);
    CHECK(error_kind("65 0\n", GraphFormat::EdgeList) == ParseErrorKind::TooLarge);

    CHECK(error_kind("", GraphFormat::Graph6) == ParseErrorKind::MalformedHeader);
    CHECK(error_kind("A", GraphFormat::Graph6) == ParseErrorKind::MalformedBody);
    CHECK(error_kind("A`", GraphFormat::Graph6) == ParseErrorKind::MalformedBody);
    CHECK(error_kind("A_?", GraphFormat::Graph6) == ParseErrorKind::MalformedBody);
    CHECK(error_kind("A ", GraphFormat::Graph6) == ParseErrorKind::MalformedBody);
    CHECK(error_kind("~??A", GraphFormat::Graph6) == ParseErrorKind::MalformedHeader);
    CHECK(error_kind("~?", GraphFormat::Graph6) == ParseErrorKind::MalformedHeader);
    CHECK(error_kind("~?@@", GraphFormat::Graph6) == ParseErrorKind::TooLarge);
}

TEST_CASE("graph6 lines and format names") {
    const auto gs = parse_graph6_lines("A_\n\nBw\nC~\n");
    REQUIRE(gs.size() == 3);
    CHECK(gs[2] == clique(4));
    CHECK(parse_format_name("graph6") == GraphFormat::Graph6);
    CHECK(parse_format_name("edgelist") == GraphFormat::EdgeList);
    CHECK(std::string(format_name(GraphFormat::EdgeList)) == "edgelist");
    CHECK_THROWS(parse_format_name("dot"));
}
