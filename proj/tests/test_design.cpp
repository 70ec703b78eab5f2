#include <string>
#include <vector>

#include "doctest.h"
#include "urd/design.hpp"
#include "urd/format.hpp"

using namespace urd;

namespace {

std::vector<Edge> edges_of(const Block& b) {
    std::vector<Edge> out;
    for (const Edge& e : block_edges(b)) out.push_back(e);
    return out;
}

const char* kGoldenV6 =
    "urd-text v1\n"
    "v=6 graph=minus-one-factor r=3 s=0\n"
    "factor: 0-1 2-3 4-5\n"
    "class path: (0;2,4) (1;3,5)\n"
    "class path: (3;0,5) (2;1,4)\n"
    "class path: (5;0,2) (4;1,3)\n";

}  // namespace

TEST_CASE("edges normalize and reject loops") {
    Edge e(5, 2);
    CHECK(e.lo == 2);
    CHECK(e.hi == 5);
    CHECK(Edge(2, 5) == e);
    CHECK_THROWS_AS(Edge(3, 3), StructureError);
}

TEST_CASE("block factories canonicalize fields") {
    Block t = Block::triangle(2, 0, 1);
    CHECK(t.v0 == 0);
    CHECK(t.v1 == 1);
    CHECK(t.v2 == 2);

    Block p = Block::path(3, 9, 4);
    CHECK(p.v0 == 3);
    CHECK(p.v1 == 4);
    CHECK(p.v2 == 9);

    CHECK_THROWS_AS(Block::triangle(1, 1, 2), StructureError);
    CHECK_THROWS_AS(Block::path(0, 4, 4), StructureError);
}

TEST_CASE("block_edges: triangle has three edges, path omits the chord") {
    auto t = edges_of(Block::triangle(0, 1, 2));
    CHECK(t == std::vector<Edge>{Edge(0, 1), Edge(0, 2), Edge(1, 2)});

    auto p = edges_of(Block::path(1, 6, 10));
    CHECK(p == std::vector<Edge>{Edge(1, 6), Edge(1, 10)});

    auto chord = edges_of(Block::path(0, 1, 2));
    CHECK(chord == std::vector<Edge>{Edge(0, 1), Edge(0, 2)});
    CHECK(std::find(chord.begin(), chord.end(), Edge(1, 2)) == chord.end());
}

TEST_CASE("canonicalize sorts blocks by smallest vertex and keeps class order") {
    ParallelClass pc;
    pc.kind = BlockKind::path;
    pc.blocks = {Block::path(4, 1, 3), Block::path(0, 2, 5)};
    Decomposition d;
    d.v = 6;
    d.graph_kind = GraphKind::minus_one_factor;
    OneFactor f;
    f.pairs = {Edge(4, 5), Edge(0, 1), Edge(2, 3)};
    d.factor = f;
    d.classes = {pc};

    Decomposition c = canonicalize(d);
    CHECK(c.classes[0].blocks[0] == Block::path(0, 2, 5));
    CHECK(c.classes[0].blocks[1] == Block::path(4, 1, 3));
    CHECK(c.factor->pairs == std::vector<Edge>{Edge(0, 1), Edge(2, 3), Edge(4, 5)});
}

TEST_CASE("canonical_form moves path classes first, stably") {
    Decomposition d;
    d.v = 3;
    d.graph_kind = GraphKind::complete;
    ParallelClass tri;
    tri.kind = BlockKind::triangle;
    tri.blocks = {Block::triangle(0, 1, 2)};
    ParallelClass path;
    path.kind = BlockKind::path;
    path.blocks = {Block::path(0, 1, 2)};
    d.classes = {tri, path};

    Decomposition c = canonical_form(d);
    CHECK(c.classes[0].kind == BlockKind::path);
    CHECK(c.classes[1].kind == BlockKind::triangle);
    CHECK(count_classes(c) == std::pair<int, int>{1, 1});
}

TEST_CASE("golden v=6 file round-trips byte-exactly") {
    Decomposition d = parse_decomposition(kGoldenV6);
    CHECK(d.v == 6);
    CHECK(d.graph_kind == GraphKind::minus_one_factor);
    CHECK(d.factor->pairs.size() == 3);
    CHECK(d.classes.size() == 3);
    CHECK(serialize_decomposition(d) == kGoldenV6);
}

TEST_CASE("parse-serialize law on a scrambled decomposition") {
    // Unsorted fields, triangle class before path class, unsorted factor.
    std::string text =
        "urd-text v1\n"
        "v=6 graph=minus-one-factor r=3 s=0\n"
        "factor: 0-1 2-3 4-5\n"
        "class path: (1;5,3) (0;4,2)\n"
        "class path: (2;4,1) (3;5,0)\n"
        "class path: (4;3,1) (5;2,0)\n";
    Decomposition d = parse_decomposition(text);
    std::string canon = serialize_decomposition(d);
    CHECK(canon == kGoldenV6);
    // Idempotence: the canonical bytes parse back to themselves.
    CHECK(serialize_decomposition(parse_decomposition(canon)) == canon);
}

TEST_CASE("serializer output is deterministic") {
    Decomposition d = parse_decomposition(kGoldenV6);
    CHECK(serialize_decomposition(d) == serialize_decomposition(d));
}

TEST_CASE("parser rejects malformed headers") {
    CHECK_THROWS_AS(parse_decomposition(""), ParseError);
    CHECK_THROWS_AS(parse_decomposition("urd-text v2\n"), ParseError);
    // 7 is not divisible by 3.
    CHECK_THROWS_AS(parse_decomposition("urd-text v1\nv=7 graph=complete r=0 s=0\n"),
                    StructureError);
    // Parity/kind mismatch both ways.
    CHECK_THROWS_AS(parse_decomposition("urd-text v1\nv=9 graph=minus-one-factor r=0 s=4\n"),
                    StructureError);
    CHECK_THROWS_AS(parse_decomposition("urd-text v1\nv=6 graph=complete r=3 s=0\n"),
                    StructureError);
}

TEST_CASE("parser demands the factor line exactly when v is even") {
    // Even v without factor line.
    CHECK_THROWS_AS(parse_decomposition("urd-text v1\n"
                                        "v=6 graph=minus-one-factor r=3 s=0\n"
                                        "class path: (0;2,4) (1;3,5)\n"),
                    StructureError);
    // Odd v with a factor line.
    CHECK_THROWS_AS(parse_decomposition("urd-text v1\n"
                                        "v=3 graph=complete r=0 s=1\n"
                                        "factor: 0-1\n"
                                        "class triangle: (0,1,2)\n"),
                    StructureError);
}

TEST_CASE("parser reports structure problems inside classes") {
    // Wrong class size: one block for v=6.
    CHECK_THROWS_AS(parse_decomposition("urd-text v1\n"
                                        "v=6 graph=minus-one-factor r=1 s=0\n"
                                        "factor: 0-1 2-3 4-5\n"
                                        "class path: (0;2,4)\n"),
                    StructureError);
    // Vertex out of range.
    CHECK_THROWS_AS(parse_decomposition("urd-text v1\n"
                                        "v=3 graph=complete r=0 s=1\n"
                                        "class triangle: (0,1,3)\n"),
                    StructureError);
    // Class covers a vertex twice.
    CHECK_THROWS_AS(parse_decomposition("urd-text v1\n"
                                        "v=6 graph=minus-one-factor r=1 s=0\n"
                                        "factor: 0-1 2-3 4-5\n"
                                        "class path: (0;2,4) (1;3,2)\n"),
                    StructureError);
}

TEST_CASE("parser pins down syntax errors with line and column") {
    try {
        parse_decomposition("urd-text v1\n"
                            "v=3 graph=complete r=0 s=1\n"
                            "class triangle: (0,1,2) \n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column > 1);
    }
    // CR line endings are rejected.
    CHECK_THROWS_AS(parse_decomposition("urd-text v1\r\n"), ParseError);
    // Leading zeros are rejected.
    CHECK_THROWS_AS(parse_decomposition("urd-text v1\nv=09 graph=complete r=0 s=4\n"), ParseError);
    // Trailing content after the last class.
    CHECK_THROWS_AS(parse_decomposition("urd-text v1\n"
                                        "v=3 graph=complete r=0 s=1\n"
                                        "class triangle: (0,1,2)\n"
                                        "\n"),
                    ParseError);
}

TEST_CASE("serializer refuses structurally impossible inputs") {
    Decomposition d;
    d.v = 7;
    d.graph_kind = GraphKind::complete;
    CHECK_THROWS_AS(serialize_decomposition(d), StructureError);

    Decomposition even_no_factor;
    even_no_factor.v = 6;
    even_no_factor.graph_kind = GraphKind::minus_one_factor;
    CHECK_THROWS_AS(serialize_decomposition(even_no_factor), StructureError);
}
