#include "urd/design.hpp"

#include <algorithm>

namespace urd {

ParseError::ParseError(const std::string& msg, int line, int column)
    : UrdError("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line(line),
      column(column) {}

Edge::Edge(Vertex a, Vertex b) {
    if (a == b) {
        throw StructureError("degenerate edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    lo = std::min(a, b);
    hi = std::max(a, b);
}

static void require_distinct(Vertex a, Vertex b, Vertex c) {
    if (a == b || a == c || b == c) {
        throw StructureError("block with repeated vertex (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
    }
}

Block Block::triangle(Vertex a, Vertex b, Vertex c) {
    require_distinct(a, b, c);
    std::array<Vertex, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return Block{BlockKind::triangle, t[0], t[1], t[2]};
}

Block Block::path(Vertex center, Vertex end1, Vertex end2) {
    require_distinct(center, end1, end2);
    return Block{BlockKind::path, center, std::min(end1, end2), std::max(end1, end2)};
}

Vertex Block::min_vertex() const {
    return std::min(v0, std::min(v1, v2));
}

EdgeList block_edges(const Block& b) {
    EdgeList out;
    if (b.kind == BlockKind::triangle) {
        out.edges = {Edge(b.v0, b.v1), Edge(b.v0, b.v2), Edge(b.v1, b.v2)};
        out.count = 3;
    } else {
        out.edges = {Edge(b.v0, b.v1), Edge(b.v0, b.v2), Edge()};
        out.count = 2;
    }
    return out;
}

Block canonical_block(const Block& b) {
    if (b.kind == BlockKind::triangle) {
        return Block::triangle(b.v0, b.v1, b.v2);
    }
    return Block::path(b.v0, b.v1, b.v2);
}

static ParallelClass canonical_class(const ParallelClass& c) {
    ParallelClass out;
    out.kind = c.kind;
    out.blocks.reserve(c.blocks.size());
    for (const Block& b : c.blocks) {
        out.blocks.push_back(canonical_block(b));
    }
    std::sort(out.blocks.begin(), out.blocks.end(), [](const Block& a, const Block& b) {
        Vertex ma = a.min_vertex(), mb = b.min_vertex();
        if (ma != mb) return ma < mb;
        return a < b;
    });
    return out;
}

Decomposition canonicalize(const Decomposition& d) {
    Decomposition out;
    out.v = d.v;
    out.graph_kind = d.graph_kind;
    if (d.factor) {
        OneFactor f;
        f.pairs.reserve(d.factor->pairs.size());
        for (const Edge& e : d.factor->pairs) {
            f.pairs.push_back(Edge(e.lo, e.hi));
        }
        std::sort(f.pairs.begin(), f.pairs.end());
        out.factor = std::move(f);
    }
    out.classes.reserve(d.classes.size());
    for (const ParallelClass& c : d.classes) {
        out.classes.push_back(canonical_class(c));
    }
    return out;
}

Decomposition canonical_form(const Decomposition& d) {
    Decomposition out = canonicalize(d);
    std::stable_partition(out.classes.begin(), out.classes.end(),
                          [](const ParallelClass& c) { return c.kind == BlockKind::path; });
    return out;
}

std::pair<int, int> count_classes(const Decomposition& d) {
    int r = 0, s = 0;
    for (const ParallelClass& c : d.classes) {
        (c.kind == BlockKind::path ? r : s)++;
    }
    return {r, s};
}

}  // namespace urd
