// Core vocabulary: vertices, edges, blocks, parallel classes, decompositions.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace urd {

using Vertex = int;

// Largest v the parser/verifier accept. Desk scale is far below this; the
// bound keeps edge tables at a sane size.
inline constexpr int kMaxV = 3000;

struct UrdError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed data: bad block, bad header, invariant broken at construction.
struct StructureError : UrdError {
    using UrdError::UrdError;
};

// Syntax error in a urd-text file. line/column are 1-based.
struct ParseError : UrdError {
    int line;
    int column;
    ParseError(const std::string& msg, int line, int column);
};

// Request that no decomposition can satisfy (wrong residue, point outside
// the spectrum, nonexistent design).
struct InfeasibleError : UrdError {
    using UrdError::UrdError;
};

// Search gave up within its limits; the design may still exist.
struct TimeoutError : UrdError {
    using UrdError::UrdError;
};

// A "can't happen" state: signals a bug upstream, not bad input.
struct InternalError : UrdError {
    using UrdError::UrdError;
};

// Normalized unordered pair, lo < hi.
struct Edge {
    Vertex lo = 0;
    Vertex hi = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b);  // normalizes; throws StructureError if a == b

    auto operator<=>(const Edge&) const = default;
};

enum class BlockKind { path, triangle };

// Triangle (a,b,c): v0 < v1 < v2 when canonical, edges {v0v1, v0v2, v1v2}.
// Path (c;x,y): v0 is the center, v1 < v2 the ends, edges {v0v1, v0v2} only
// (the chord v1v2 is NOT part of the block).
struct Block {
    BlockKind kind = BlockKind::triangle;
    Vertex v0 = 0;
    Vertex v1 = 0;
    Vertex v2 = 0;

    static Block triangle(Vertex a, Vertex b, Vertex c);
    static Block path(Vertex center, Vertex end1, Vertex end2);

    Vertex min_vertex() const;
    auto operator<=>(const Block&) const = default;
};

// Up to three normalized edges of a block without heap traffic.
struct EdgeList {
    std::array<Edge, 3> edges{};
    int count = 0;
    const Edge* begin() const { return edges.data(); }
    const Edge* end() const { return edges.data() + count; }
};

EdgeList block_edges(const Block& b);

// Canonical (sorted-field) copy of a raw block; throws StructureError on a
// repeated vertex. Path centers stay in place, only the ends get sorted.
Block canonical_block(const Block& b);

struct ParallelClass {
    BlockKind kind = BlockKind::triangle;
    std::vector<Block> blocks;

    bool operator==(const ParallelClass&) const = default;
};

struct OneFactor {
    std::vector<Edge> pairs;

    bool operator==(const OneFactor&) const = default;
};

enum class GraphKind { complete, minus_one_factor };

// The certificate object: K_v (v odd) or K_v minus `factor` (v even),
// decomposed into ordered uniform parallel classes.
struct Decomposition {
    int v = 0;
    GraphKind graph_kind = GraphKind::complete;
    std::optional<OneFactor> factor;
    std::vector<ParallelClass> classes;

    bool operator==(const Decomposition&) const = default;
};

// Sorts block fields, blocks within each class by smallest vertex, and
// factor pairs by lo. Class order is preserved.
Decomposition canonicalize(const Decomposition& d);

// canonicalize + stable reorder putting path classes before triangle
// classes: exactly the form the serializer emits.
Decomposition canonical_form(const Decomposition& d);

// (r, s) = (#path classes, #triangle classes).
std::pair<int, int> count_classes(const Decomposition& d);

}  // namespace urd
