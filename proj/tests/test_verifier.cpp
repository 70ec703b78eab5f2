#include <algorithm>
#include <string>

#include "doctest.h"
#include "urd/bundled.hpp"
#include "urd/format.hpp"
#include "urd/verifier.hpp"

using namespace urd;

namespace {

const std::string kGoldenV6 =
    "urd-text v1\n"
    "v=6 graph=minus-one-factor r=3 s=0\n"
    "factor: 0-1 2-3 4-5\n"
    "class path: (0;2,4) (1;3,5)\n"
    "class path: (3;0,5) (2;1,4)\n"
    "class path: (5;0,2) (4;1,3)\n";

bool has(const Report& rep, ViolationCode code, const std::string& needle = "") {
    return std::any_of(rep.violations.begin(), rep.violations.end(), [&](const Violation& viol) {
        return viol.code == code && viol.detail.find(needle) != std::string::npos;
    });
}

int count(const Report& rep, ViolationCode code) {
    return static_cast<int>(std::count_if(rep.violations.begin(), rep.violations.end(),
                                          [&](const Violation& viol) { return viol.code == code; }));
}

Decomposition tiny_triangle() {  // the unique v=3 decomposition
    Decomposition d;
    d.v = 3;
    d.classes.push_back({BlockKind::triangle, {Block::triangle(0, 1, 2)}});
    return d;
}

}  // namespace

TEST_CASE("accepts the v=3 and golden v=6 decompositions") {
    CHECK(verify(tiny_triangle()).accepted());
    CHECK(verify(parse_decomposition(kGoldenV6)).accepted());
}

TEST_CASE("acceptance is invariant under class and block reordering") {
    Decomposition d = parse_decomposition(kGoldenV6);
    std::swap(d.classes[0], d.classes[2]);
    std::swap(d.classes[1].blocks[0], d.classes[1].blocks[1]);
    std::swap(d.factor->pairs[0], d.factor->pairs[2]);
    CHECK(verify(d).accepted());
}

TEST_CASE("single path mutation in the bundled v=12 (6,1) design") {
    Decomposition d = load_bundled("urd-12-6-1");
    REQUIRE(d.classes[0].kind == BlockKind::path);
    REQUIRE(d.classes[0].blocks[1] == Block::path(1, 4, 7));
    d.classes[0].blocks[1] = Block::path(1, 4, 8);

    const Report rep = verify(d);
    CHECK(!rep.accepted());
    CHECK(rep.violations.size() == 4);
    CHECK(has(rep, ViolationCode::not_a_partition, "vertex 7 appears in 0"));
    CHECK(has(rep, ViolationCode::not_a_partition, "vertex 8 appears in 2"));
    CHECK(has(rep, ViolationCode::edge_repeated, "1-8"));
    CHECK(has(rep, ViolationCode::edge_missing, "1-7"));
}

TEST_CASE("parity_mismatch: bad v, wrong graph kind for the parity") {
    Decomposition d = tiny_triangle();
    d.v = 5;
    CHECK(has(verify(d), ViolationCode::parity_mismatch));
    d.v = 0;
    CHECK(has(verify(d), ViolationCode::parity_mismatch));

    d = tiny_triangle();
    d.graph_kind = GraphKind::minus_one_factor;
    CHECK(has(verify(d), ViolationCode::parity_mismatch));

    d = parse_decomposition(kGoldenV6);
    d.graph_kind = GraphKind::complete;
    CHECK(has(verify(d), ViolationCode::parity_mismatch));
}

TEST_CASE("bad_vertex_range: vertex outside [0,v) and v over the cap") {
    Decomposition d = tiny_triangle();
    d.classes[0].blocks[0] = Block::triangle(0, 1, 5);
    CHECK(has(verify(d), ViolationCode::bad_vertex_range));

    d = tiny_triangle();
    d.v = kMaxV + 3;
    CHECK(has(verify(d), ViolationCode::bad_vertex_range, "exceeds"));
}

TEST_CASE("bad_factor: presence, count, normalization, coverage") {
    Decomposition d = tiny_triangle();
    d.factor = OneFactor{{Edge(0, 1)}};
    CHECK(has(verify(d), ViolationCode::bad_factor, "carries a factor"));

    d = parse_decomposition(kGoldenV6);
    d.factor.reset();
    CHECK(has(verify(d), ViolationCode::bad_factor, "no factor"));

    d = parse_decomposition(kGoldenV6);
    d.factor->pairs.pop_back();
    CHECK(has(verify(d), ViolationCode::bad_factor, "expected 3"));

    d = parse_decomposition(kGoldenV6);
    d.factor->pairs[1] = Edge(0, 2);  // 0 covered twice, 3 never
    CHECK(has(verify(d), ViolationCode::bad_factor, "vertex 0 2 times"));
    CHECK(has(verify(d), ViolationCode::bad_factor, "vertex 3 0 times"));

    d = parse_decomposition(kGoldenV6);
    std::swap(d.factor->pairs[0].lo, d.factor->pairs[0].hi);  // forge 1-0
    CHECK(has(verify(d), ViolationCode::bad_factor, "not normalized"));

    d = parse_decomposition(kGoldenV6);
    d.factor->pairs[0].hi = 9;  // forge 0-9
    CHECK(has(verify(d), ViolationCode::bad_vertex_range, "factor pair"));
}

TEST_CASE("wrong_class_size and non_uniform_class") {
    Decomposition d = parse_decomposition(kGoldenV6);
    d.classes[1].blocks.pop_back();
    CHECK(has(verify(d), ViolationCode::wrong_class_size, "has 1 blocks, expected 2"));

    d = tiny_triangle();
    d.classes[0].kind = BlockKind::path;
    CHECK(has(verify(d), ViolationCode::non_uniform_class, "triangle block in a path class"));
}

TEST_CASE("not_a_partition: forged repeated vertex inside a block") {
    Decomposition d = tiny_triangle();
    d.classes[0].blocks[0] = Block{BlockKind::triangle, 0, 1, 1};
    CHECK(has(verify(d), ViolationCode::not_a_partition, "repeats a vertex"));
}

TEST_CASE("edge_repeated and edge_missing") {
    Decomposition d = tiny_triangle();
    d.classes.push_back(d.classes[0]);  // same triangle twice
    Report rep = verify(d);
    CHECK(count(rep, ViolationCode::edge_repeated) == 3);

    d = tiny_triangle();
    d.classes[0] = {BlockKind::path, {Block::path(1, 0, 2)}};  // chord 0-2 unused
    rep = verify(d);
    CHECK(has(rep, ViolationCode::edge_missing, "0-2"));
    CHECK(count(rep, ViolationCode::edge_missing) == 1);
}

TEST_CASE("edge_in_factor") {
    Decomposition d = parse_decomposition(kGoldenV6);
    d.classes[1].blocks[0] = Block::path(0, 1, 5);  // 0-1 is a factor pair
    CHECK(has(verify(d), ViolationCode::edge_in_factor, "0-1"));
}

TEST_CASE("violation list is capped at 100") {
    Decomposition d;
    d.v = 99;  // no classes: C(99,2) = 4851 missing edges
    CHECK(verify(d).violations.size() == 100);
}

TEST_CASE("render carries code name, class locus and detail") {
    Violation viol{ViolationCode::edge_repeated, "edge 1-8 already used", 4};
    CHECK(viol.render() == "EdgeRepeated class 4: edge 1-8 already used");
    Violation free_viol{ViolationCode::bad_factor, "no factor", -1};
    CHECK(free_viol.render() == "BadFactor: no factor");
}

TEST_CASE("verify_request layers header expectations on top") {
    Decomposition d = parse_decomposition(kGoldenV6);
    CHECK(verify_request(d, 6, 3, 0).accepted());
    CHECK(has(verify_request(d, 9, 3, 0), ViolationCode::header_mismatch, "expected v=9"));
    CHECK(has(verify_request(d, 6, 0, 2), ViolationCode::header_mismatch, "expected (0,2)"));
}
