// The exchange lemma, made executable: two edge-disjoint triangle parallel
// classes on the same vertex set become three path parallel classes
// covering exactly the same edges. Works through the bipartite
// intersection graph B of the two classes.
#pragma once

#include <array>
#include <vector>

#include "urd/design.hpp"

namespace urd {

// The two input classes share an edge (equivalently, B has a multi-edge).
struct NotEdgeDisjointError : StructureError {
    using StructureError::StructureError;
};

// An input class is not a triangle class.
struct KindMismatchError : StructureError {
    using StructureError::StructureError;
};

// One edge of B: block q'_left and block q''_right share G-vertex `shared`.
struct BEdge {
    int left = 0;
    int right = 0;
    Vertex shared = 0;
};

// Bipartite intersection structure of two edge-disjoint triangle classes.
// 3-regular with v edges, one per G-vertex; G is the line graph of B.
struct IntersectionGraph {
    int v = 0;  // host graph order
    int n = 0;  // v/3 block-vertices per side
    std::vector<BEdge> edges;
    std::vector<std::array<int, 3>> left_inc;   // left_inc[i]: edge ids at x'_i
    std::vector<std::array<int, 3>> right_inc;  // right_inc[j]: edge ids at x''_j
};

// Proper 3-edge-coloring of an IntersectionGraph; every color class is a
// perfect matching. Colors 0,1,2 are written a,b,c below.
struct EdgeColoring {
    std::vector<int> color;  // color[edge id] in {0,1,2}
};

// Color sequence of the P4 walk that generates one path class.
enum class Rotation { abc, bca, cab };

// Builds B from two triangle classes. Throws KindMismatchError unless both
// classes are triangle-kind, StructureError unless both are vertex
// partitions of the same {0..v-1}, NotEdgeDisjointError if they share an
// edge. 3-regularity is re-checked before returning.
IntersectionGraph build_intersection_graph(const ParallelClass& q1, const ParallelClass& q2);

// Deterministic proper 3-edge-coloring: extract a perfect matching by
// augmenting paths (left vertices in increasing order, adjacency in stored
// order), remove it, repeat. First matching is a, then b, then c. Throws
// InternalError if no matching exists (impossible for valid input).
EdgeColoring three_edge_color(const IntersectionGraph& b);

// Walks, from each x' in X', the rotation's first color to X'', second
// color back to X', third color to X''. The three traversed edge labels
// form one P3 of G centered on the middle edge's label. Returns the class
// of n paths; every G-vertex is covered exactly once.
ParallelClass extract_path_class(const IntersectionGraph& b, const EdgeColoring& col,
                                 Rotation rotation);

// The lemma end to end: returns the classes for rotations (abc, bca, cab),
// whose combined edges equal the union of q1's and q2's edges exactly.
std::array<ParallelClass, 3> transform_pair(const ParallelClass& q1, const ParallelClass& q2);

}  // namespace urd
