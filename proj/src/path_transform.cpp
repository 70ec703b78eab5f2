#include "urd/path_transform.hpp"

#include <algorithm>
#include <string>

namespace urd {

namespace {

// Maps each vertex of {0..v-1} to the index of the block containing it.
// Throws unless `pc` is a triangle class forming a vertex partition.
std::vector<int> block_of_vertex(const ParallelClass& pc, int v, const char* which) {
    if (pc.kind != BlockKind::triangle) {
        throw KindMismatchError(std::string(which) + " class is not a triangle class");
    }
    std::vector<int> pos(v, -1);
    for (size_t i = 0; i < pc.blocks.size(); i++) {
        const Block& b = pc.blocks[i];
        if (b.kind != BlockKind::triangle) {
            throw KindMismatchError(std::string(which) + " class contains a path block");
        }
        for (Vertex u : {b.v0, b.v1, b.v2}) {
            if (u < 0 || u >= v) {
                throw StructureError(std::string(which) + " class has vertex " +
                                     std::to_string(u) + " outside [0," + std::to_string(v) + ")");
            }
            if (pos[u] != -1) {
                throw StructureError(std::string(which) + " class covers vertex " +
                                     std::to_string(u) + " twice");
            }
            pos[u] = static_cast<int>(i);
        }
    }
    // v = 3 * |blocks|, so full coverage follows from no vertex repeating.
    return pos;
}

// Edge id of the given color at a vertex's incidence slot, or -1.
int edge_with_color(const std::array<int, 3>& inc, const std::vector<int>& color, int c) {
    for (int e : inc) {
        if (color[e] == c) return e;
    }
    return -1;
}

struct Matcher {
    const IntersectionGraph& b;
    const std::vector<int>& color;       // already-colored edges are skipped
    std::vector<int> match_left;         // left i  -> edge id or -1
    std::vector<int> match_right;        // right j -> edge id or -1
    std::vector<char> visited;           // right side, per augmentation

    explicit Matcher(const IntersectionGraph& graph, const std::vector<int>& col)
        : b(graph), color(col), match_left(graph.n, -1), match_right(graph.n, -1),
          visited(graph.n, 0) {}

    bool augment(int i) {
        for (int e : b.left_inc[i]) {
            if (color[e] != -1) continue;
            int j = b.edges[e].right;
            if (visited[j]) continue;
            visited[j] = 1;
            if (match_right[j] == -1 || augment(b.edges[match_right[j]].left)) {
                match_left[i] = e;
                match_right[j] = e;
                return true;
            }
        }
        return false;
    }
};

}  // namespace

IntersectionGraph build_intersection_graph(const ParallelClass& q1, const ParallelClass& q2) {
    if (q1.blocks.size() != q2.blocks.size() || q1.blocks.empty()) {
        throw StructureError("the two classes have different block counts (" +
                             std::to_string(q1.blocks.size()) + " vs " +
                             std::to_string(q2.blocks.size()) + ")");
    }
    const int n = static_cast<int>(q1.blocks.size());
    const int v = 3 * n;

    std::vector<int> pos1 = block_of_vertex(q1, v, "first");
    std::vector<int> pos2 = block_of_vertex(q2, v, "second");

    IntersectionGraph b;
    b.v = v;
    b.n = n;
    b.edges.reserve(v);
    b.left_inc.assign(n, {-1, -1, -1});
    b.right_inc.assign(n, {-1, -1, -1});
    std::vector<int> ldeg(n, 0), rdeg(n, 0);

    // seen_pair[i*n+j]: B-edge id already connecting x'_i and x''_j, or -1.
    std::vector<int> seen_pair(static_cast<size_t>(n) * n, -1);

    for (Vertex u = 0; u < v; u++) {
        int i = pos1[u];
        int j = pos2[u];
        int& prior = seen_pair[static_cast<size_t>(i) * n + j];
        if (prior != -1) {
            throw NotEdgeDisjointError(
                "classes share edge " + std::to_string(std::min(b.edges[prior].shared, u)) + "-" +
                std::to_string(std::max(b.edges[prior].shared, u)) + " (blocks " +
                std::to_string(i) + " and " + std::to_string(j) + " meet twice)");
        }
        int e = static_cast<int>(b.edges.size());
        prior = e;
        b.edges.push_back({i, j, u});
        if (ldeg[i] >= 3 || rdeg[j] >= 3) {
            throw InternalError("intersection graph degree exceeds 3");
        }
        b.left_inc[i][ldeg[i]++] = e;
        b.right_inc[j][rdeg[j]++] = e;
    }

    for (int i = 0; i < n; i++) {
        if (ldeg[i] != 3 || rdeg[i] != 3) {
            throw InternalError("intersection graph is not 3-regular");
        }
    }
    return b;
}

EdgeColoring three_edge_color(const IntersectionGraph& b) {
    for (int i = 0; i < b.n; i++) {
        if (b.left_inc[i][2] < 0 || b.right_inc[i][2] < 0) {
            throw InternalError("three_edge_color requires a 3-regular input");
        }
    }
    EdgeColoring col;
    col.color.assign(b.edges.size(), -1);

    for (int c = 0; c < 3; c++) {
        Matcher m(b, col.color);
        for (int i = 0; i < b.n; i++) {
            std::fill(m.visited.begin(), m.visited.end(), 0);
            if (!m.augment(i)) {
                throw InternalError("no perfect matching in a regular bipartite graph");
            }
        }
        for (int i = 0; i < b.n; i++) {
            col.color[m.match_left[i]] = c;
        }
    }
    return col;
}

ParallelClass extract_path_class(const IntersectionGraph& b, const EdgeColoring& col,
                                 Rotation rotation) {
    static constexpr int kSeq[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    const int* seq = kSeq[static_cast<int>(rotation)];

    ParallelClass pc;
    pc.kind = BlockKind::path;
    pc.blocks.reserve(b.n);
    for (int i = 0; i < b.n; i++) {
        int e1 = edge_with_color(b.left_inc[i], col.color, seq[0]);
        if (e1 < 0) throw InternalError("missing color at a left vertex");
        int j = b.edges[e1].right;
        int e2 = edge_with_color(b.right_inc[j], col.color, seq[1]);
        if (e2 < 0) throw InternalError("missing color at a right vertex");
        int i2 = b.edges[e2].left;
        int e3 = edge_with_color(b.left_inc[i2], col.color, seq[2]);
        if (e3 < 0) throw InternalError("missing color at a left vertex");
        pc.blocks.push_back(
            Block::path(b.edges[e2].shared, b.edges[e1].shared, b.edges[e3].shared));
    }
    return pc;
}

std::array<ParallelClass, 3> transform_pair(const ParallelClass& q1, const ParallelClass& q2) {
    IntersectionGraph b = build_intersection_graph(q1, q2);
    EdgeColoring col = three_edge_color(b);
    return {extract_path_class(b, col, Rotation::abc),
            extract_path_class(b, col, Rotation::bca),
            extract_path_class(b, col, Rotation::cab)};
}

}  // namespace urd
