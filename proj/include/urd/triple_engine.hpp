// Resolvable triangle systems: KTS(v) for v = 3 (mod 6) and NKTS(v) for
// v = 0 (mod 6), v >= 18. Three stages, first hit wins: bundled
// certificates for small hard orders, a seeded rotational construction
// (base class plus fixed transversal classes over Z_{v/3} x 3 levels),
// and a greedy-seeded slot hill-climb as the general fallback. Every
// stage re-verifies its output before returning.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "urd/design.hpp"
#include "urd/rng.hpp"

namespace urd {

struct SearchLimits {
    uint64_t seed = 0;
    int max_restarts = 500;        // hill-climb restarts
    int max_class_attempts = 200;  // greedy attempts per find_parallel_class
    std::optional<double> time_limit_secs = 60.0;  // nullopt: unlimited
};

// A resolvable triangle decomposition: of K_v when factor is absent (v
// odd), of K_v minus factor when present (v even).
struct TripleSystem {
    int v = 0;
    std::optional<OneFactor> factor;
    std::vector<ParallelClass> classes;  // all TriangleKind
};

Decomposition to_decomposition(const TripleSystem& ts);

// Unused host edges, one neighbor bitset row per vertex.
struct EdgeState {
    int v = 0;
    int words = 0;  // 64-bit words per row
    std::vector<uint64_t> adj;
    long edges_left = 0;

    static EdgeState complete(int v);
    static EdgeState complete_minus_factor(int v, const OneFactor& factor);

    const uint64_t* row(Vertex u) const { return adj.data() + static_cast<size_t>(u) * words; }
    bool has(Vertex a, Vertex b) const {
        return (row(a)[b >> 6] >> (b & 63)) & 1;
    }
    void remove(Vertex a, Vertex b);
    void add(Vertex a, Vertex b);
    void remove_block(const Block& b);
    void add_block(const Block& b);
};

// One parallel class of triangles drawn from the unused edges, or nullopt
// after max_attempts randomized greedy attempts (each a bounded DFS over
// placements at the least uncovered vertex). The hill-climb warm start
// installs classes from here until it stalls. Does not mutate `state`.
std::optional<ParallelClass> find_parallel_class(const EdgeState& state, Rng& rng,
                                                 int max_attempts);

// Kirkman triple system: (v-1)/2 triangle classes partitioning E(K_v).
// Throws InfeasibleError unless v = 3 (mod 6), TimeoutError when limits
// are exhausted. Bundled v return instantly and ignore the seed.
TripleSystem build_kts(int v, const SearchLimits& limits);

// Nearly Kirkman triple system: factor fixed to {2i,2i+1} plus (v-2)/2
// triangle classes partitioning E(K_v) minus the factor. Throws
// InfeasibleError for v = 6 and v = 12 (no such design) and for wrong
// residues; TimeoutError when limits are exhausted.
TripleSystem build_nkts(int v, const SearchLimits& limits);

}  // namespace urd
