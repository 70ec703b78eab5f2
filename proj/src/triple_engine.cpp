#include "urd/triple_engine.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <string>
#include <utility>

#include "urd/bundled.hpp"
#include "urd/verifier.hpp"

namespace urd {

namespace {

using Clock = std::chrono::steady_clock;

// DFS budget per greedy attempt; generous at desk scale, keeps a doomed
// attempt from degenerating into exhaustive search. When exactly one
// class worth of edges is left the question is a cheap exact decision, so
// the cap is lifted far enough to settle it.
long node_budget(const EdgeState& st) {
    const long base = 64L * st.v + 256;
    return st.edges_left == st.v ? 32 * base : base;
}

std::string system_name(int v, bool nearly) {
    return (nearly ? "NKTS(" : "KTS(") + std::to_string(v) + ")";
}

}  // namespace

Decomposition to_decomposition(const TripleSystem& ts) {
    Decomposition d;
    d.v = ts.v;
    d.graph_kind = ts.factor ? GraphKind::minus_one_factor : GraphKind::complete;
    d.factor = ts.factor;
    d.classes = ts.classes;
    return d;
}

EdgeState EdgeState::complete(int v) {
    EdgeState st;
    st.v = v;
    st.words = (v + 63) / 64;
    st.adj.assign(static_cast<size_t>(v) * st.words, 0);
    for (Vertex u = 0; u < v; u++) {
        uint64_t* row = st.adj.data() + static_cast<size_t>(u) * st.words;
        for (Vertex w = 0; w < v; w++) {
            if (w != u) row[w >> 6] |= uint64_t{1} << (w & 63);
        }
    }
    st.edges_left = static_cast<long>(v) * (v - 1) / 2;
    return st;
}

EdgeState EdgeState::complete_minus_factor(int v, const OneFactor& factor) {
    EdgeState st = complete(v);
    for (const Edge& e : factor.pairs) st.remove(e.lo, e.hi);
    return st;
}

void EdgeState::remove(Vertex a, Vertex b) {
    adj[static_cast<size_t>(a) * words + (b >> 6)] &= ~(uint64_t{1} << (b & 63));
    adj[static_cast<size_t>(b) * words + (a >> 6)] &= ~(uint64_t{1} << (a & 63));
    edges_left--;
}

void EdgeState::add(Vertex a, Vertex b) {
    adj[static_cast<size_t>(a) * words + (b >> 6)] |= uint64_t{1} << (b & 63);
    adj[static_cast<size_t>(b) * words + (a >> 6)] |= uint64_t{1} << (a & 63);
    edges_left++;
}

void EdgeState::remove_block(const Block& b) {
    for (const Edge& e : block_edges(b)) remove(e.lo, e.hi);
}

void EdgeState::add_block(const Block& b) {
    for (const Edge& e : block_edges(b)) add(e.lo, e.hi);
}

namespace {

// One randomized greedy attempt: always extend at the least uncovered
// vertex, shuffling its candidate triangles, with bounded backtracking.
struct ClassSearch {
    const EdgeState& st;
    Rng& rng;
    int need;
    std::vector<uint64_t> uncovered;
    std::vector<Block> blocks;
    long nodes = 0;
    long budget;
    bool out_of_budget = false;

    ClassSearch(const EdgeState& state, Rng& r)
        : st(state), rng(r), need(state.v / 3), uncovered(state.words, 0),
          budget(node_budget(state)) {
        for (Vertex u = 0; u < state.v; u++) uncovered[u >> 6] |= uint64_t{1} << (u & 63);
        blocks.reserve(need);
    }

    bool covered_none(Vertex u) const { return (uncovered[u >> 6] >> (u & 63)) & 1; }
    void cover(Vertex u) { uncovered[u >> 6] &= ~(uint64_t{1} << (u & 63)); }
    void uncover(Vertex u) { uncovered[u >> 6] |= uint64_t{1} << (u & 63); }

    int least_uncovered() const {
        for (int w = 0; w < st.words; w++) {
            if (uncovered[w]) return w * 64 + std::countr_zero(uncovered[w]);
        }
        return -1;
    }

    bool extend() {
        if (static_cast<int>(blocks.size()) == need) return true;
        if (out_of_budget || ++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        const Vertex u = least_uncovered();

        // Triangles {u,a,b}: a,b uncovered neighbors of u with edge a-b free.
        std::vector<std::pair<Vertex, Vertex>> cands;
        const uint64_t* urow = st.row(u);
        for (int w = 0; w < st.words; w++) {
            uint64_t m = urow[w] & uncovered[w];
            while (m) {
                const Vertex a = w * 64 + std::countr_zero(m);
                m &= m - 1;
                const uint64_t* arow = st.row(a);
                for (int w2 = w; w2 < st.words; w2++) {
                    uint64_t m2 = arow[w2] & urow[w2] & uncovered[w2];
                    if (w2 == w) m2 &= ~((uint64_t{2} << (a & 63)) - 1);  // b > a
                    while (m2) {
                        const Vertex b = w2 * 64 + std::countr_zero(m2);
                        m2 &= m2 - 1;
                        cands.emplace_back(a, b);
                    }
                }
            }
        }
        if (cands.empty()) return false;
        rng.shuffle(cands);

        cover(u);
        for (const auto& [a, b] : cands) {
            cover(a);
            cover(b);
            blocks.push_back(Block::triangle(u, a, b));
            if (extend()) return true;
            blocks.pop_back();
            uncover(a);
            uncover(b);
            if (out_of_budget) break;
        }
        uncover(u);
        return false;
    }
};

}  // namespace

std::optional<ParallelClass> find_parallel_class(const EdgeState& state, Rng& rng,
                                                 int max_attempts) {
    for (int attempt = 0; attempt < max_attempts; attempt++) {
        ClassSearch cs(state, rng);
        if (cs.extend()) {
            ParallelClass pc;
            pc.kind = BlockKind::triangle;
            pc.blocks = std::move(cs.blocks);
            return pc;
        }
    }
    return std::nullopt;
}

namespace {

TripleSystem adopt_bundled(int v, const std::string& name, bool expect_factor) {
    Decomposition d = load_bundled(name);  // parses and fully verifies
    if (d.v != v) {
        throw StructureError("bundled '" + name + "' is for v=" + std::to_string(d.v));
    }
    for (const ParallelClass& pc : d.classes) {
        if (pc.kind != BlockKind::triangle) {
            throw StructureError("bundled '" + name + "' contains path classes");
        }
    }
    if (d.factor.has_value() != expect_factor) {
        throw StructureError("bundled '" + name + "' has the wrong factor shape");
    }
    if (d.factor) {
        for (int i = 0; i < v / 2; i++) {
            if (d.factor->pairs[i] != Edge(2 * i, 2 * i + 1)) {
                throw StructureError("bundled '" + name + "' does not use the fixed factor");
            }
        }
    }
    return TripleSystem{v, std::move(d.factor), std::move(d.classes)};
}

// Rotational construction. Points are (i, l) -> l*m + i for i in Z_m and
// level l in {0,1,2}, m = v/3, and i -> i+1 (mod m) acts as an
// automorphism level-wise. A base parallel class B is sought whose edges
// use every within-level difference exactly once and distinct cross-level
// differences, so its m rotations are pairwise edge-disjoint; the cross
// differences B leaves over are swept by fixed (rotation-invariant)
// transversal classes {(i, i+a, i+b) : i in Z_m}. For even m the
// within-level difference m/2 is set aside: those short orbits are
// precisely a one-factor, which suits the nearly-Kirkman shape. Existence
// of a base class is order-specific, so the result is optional and the
// caller falls back to randomized search.
struct Rotational {
    int v, m;
    bool nearly;
    int nfixed;      // rotation-invariant transversal classes
    int need_cross;  // cross differences per level pair carried by B
    Rng& rng;
    std::vector<uint8_t> within_used;  // [level][d], d in 0..m
    std::vector<uint8_t> cross_used;   // [pair][d], pairs 01, 02, 12
    std::array<int, 3> cross_count{};
    std::vector<uint8_t> covered;
    std::vector<std::array<Vertex, 3>> base;
    std::vector<std::array<int, 2>> transversals;  // (a, b) difference pairs
    long nodes = 0;
    long node_cap = 0;

    Rotational(int v_, bool nearly_, Rng& r)
        : v(v_), m(v_ / 3), nearly(nearly_),
          nfixed(nearly_ ? (m - 2) / 2 : (m - 1) / 2), need_cross(m - nfixed), rng(r),
          within_used(3 * (m + 1)), cross_used(3 * m), covered(v_) {}

    // Edge classification: within-level edges by folded difference, cross
    // edges by (level pair, directed difference low level -> high level).
    struct EdgeClass {
        bool within;
        int idx;  // level (within) or pair index 01->0, 02->1, 12->2
        int d;
    };

    EdgeClass classify(Vertex p, Vertex q) const {
        int lp = p / m, ip = p % m;
        int lq = q / m, iq = q % m;
        if (lp == lq) {
            int d = (ip - iq + m) % m;
            return {true, lp, std::min(d, m - d)};
        }
        if (lp > lq) {
            std::swap(lp, lq);
            std::swap(ip, iq);
        }
        return {false, lp + lq - 1, (iq - ip + m) % m};  // (0,1)->0 (0,2)->1 (1,2)->2
    }

    bool usable_within(int d) const {
        if (d == 0) return false;
        if (nearly && d == m / 2) return false;  // reserved for the factor
        return true;
    }

    bool feasible(const std::array<Vertex, 3>& t) const {
        std::array<EdgeClass, 3> es{classify(t[0], t[1]), classify(t[0], t[2]),
                                    classify(t[1], t[2])};
        std::array<int, 3> extra{};
        for (int a = 0; a < 3; a++) {
            const EdgeClass& e = es[a];
            for (int b = 0; b < a; b++) {
                if (es[b].within == e.within && es[b].idx == e.idx && es[b].d == e.d) {
                    return false;
                }
            }
            if (e.within) {
                if (!usable_within(e.d) || within_used[e.idx * (m + 1) + e.d]) return false;
            } else {
                if (cross_used[e.idx * m + e.d]) return false;
                extra[e.idx]++;
            }
        }
        for (int pi = 0; pi < 3; pi++) {
            if (cross_count[pi] + extra[pi] > need_cross) return false;
        }
        return true;
    }

    void place(const std::array<Vertex, 3>& t, bool on) {
        const int sgn = on ? 1 : -1;
        const std::array<std::pair<Vertex, Vertex>, 3> pairs{
            {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}};
        for (const auto& [p, q] : pairs) {
            EdgeClass e = classify(p, q);
            if (e.within) {
                within_used[e.idx * (m + 1) + e.d] = on;
            } else {
                cross_used[e.idx * m + e.d] = on;
                cross_count[e.idx] += sgn;
            }
        }
        for (Vertex p : t) covered[p] = on;
        if (on) {
            base.push_back(t);
        } else {
            base.pop_back();
        }
    }

    bool match_transversals() {
        std::array<std::vector<int>, 3> rem;
        for (int pi = 0; pi < 3; pi++) {
            for (int d = 0; d < m; d++) {
                if (!cross_used[pi * m + d]) rem[pi].push_back(d);
            }
            if (static_cast<int>(rem[pi].size()) != nfixed) return false;
        }
        transversals.clear();
        std::vector<uint8_t> used1(m), used2(m);
        auto mdfs = [&](auto&& self, int k) -> bool {
            if (k == nfixed) return true;
            const int a = rem[0][k];
            for (int b : rem[1]) {
                if (used1[b]) continue;
                const int c = (b - a + m) % m;
                if (cross_used[2 * m + c] || used2[c]) continue;
                used1[b] = used2[c] = 1;
                transversals.push_back({a, b});
                if (self(self, k + 1)) return true;
                transversals.pop_back();
                used1[b] = used2[c] = 0;
            }
            return false;
        };
        return mdfs(mdfs, 0);
    }

    bool dfs(std::vector<std::array<Vertex, 3>>& scratch) {
        if (++nodes > node_cap) throw TimeoutError("rotational construction budget");
        if (static_cast<int>(base.size()) == m) return match_transversals();
        Vertex x = 0;
        while (covered[x]) x++;
        scratch.clear();
        for (Vertex a = x + 1; a < v; a++) {
            if (covered[a]) continue;
            for (Vertex b = a + 1; b < v; b++) {
                if (covered[b]) continue;
                std::array<Vertex, 3> t{x, a, b};
                if (feasible(t)) scratch.push_back(t);
            }
        }
        rng.shuffle(scratch);
        std::vector<std::array<Vertex, 3>> next;
        for (const auto& t : scratch) {
            place(t, true);
            if (dfs(next)) return true;
            place(t, false);
        }
        return false;
    }

    // Expand the base class and transversal differences into a full system
    // on vertices relabeled so an even-order factor is {2i, 2i+1}.
    TripleSystem expand() const {
        std::vector<Vertex> relabel(v);
        std::optional<OneFactor> factor;
        if (nearly) {
            OneFactor f;
            int k = 0;
            for (int l = 0; l < 3; l++) {
                for (int i = 0; i < m / 2; i++, k++) {
                    relabel[l * m + i] = 2 * k;
                    relabel[l * m + i + m / 2] = 2 * k + 1;
                    f.pairs.push_back(Edge(2 * k, 2 * k + 1));
                }
            }
            factor = std::move(f);
        } else {
            for (Vertex p = 0; p < v; p++) relabel[p] = p;
        }
        std::vector<ParallelClass> classes;
        for (int r = 0; r < m; r++) {
            ParallelClass pc{BlockKind::triangle, {}};
            for (const auto& t : base) {
                auto rot = [&](Vertex p) { return relabel[(p % m + r) % m + (p / m) * m]; };
                pc.blocks.push_back(Block::triangle(rot(t[0]), rot(t[1]), rot(t[2])));
            }
            std::sort(pc.blocks.begin(), pc.blocks.end());
            classes.push_back(std::move(pc));
        }
        for (const auto& [a, b] : transversals) {
            ParallelClass pc{BlockKind::triangle, {}};
            for (int i = 0; i < m; i++) {
                pc.blocks.push_back(Block::triangle(relabel[i], relabel[(i + a) % m + m],
                                                    relabel[(i + b) % m + 2 * m]));
            }
            std::sort(pc.blocks.begin(), pc.blocks.end());
            classes.push_back(std::move(pc));
        }
        return TripleSystem{v, std::move(factor), std::move(classes)};
    }
};

// Seeded attempt schedule for the rotational model. Tries are cheap and
// order-specific failures are real (v=15 admits no base class), so a
// bounded number of randomized retries settles the question quickly.
std::optional<TripleSystem> rotational_system(int v, bool nearly, uint64_t seed,
                                              const std::optional<Clock::time_point>& deadline) {
    if (v < 9 || v % 3 != 0) return std::nullopt;
    Rng rng(seed);
    for (int attempt = 0; attempt < 48; attempt++) {
        if (deadline && Clock::now() > *deadline) return std::nullopt;
        Rotational rot(v, nearly, rng);
        rot.node_cap = 400'000;
        std::vector<std::array<Vertex, 3>> scratch;
        try {
            if (rot.dfs(scratch)) return rot.expand();
            return std::nullopt;  // exhausted: no base class of this shape exists
        } catch (const TimeoutError&) {
            // budget ran out; another candidate shuffle may land it
        }
    }
    return std::nullopt;
}

// Hill-climbing state: one slot per target class, each holding a partial
// parallel class; all placed triangles pairwise edge-disjoint. A move
// grows some class by one triangle, or swaps a placed triangle out for a
// new one at equal score, so the score never decreases. This mixes far
// better than class-sequential greedy, which stalls on the final classes.
struct HillClimb {
    int v;
    int slots;
    int full;  // blocks per complete class
    EdgeState st;
    Rng& rng;
    std::vector<std::vector<Block>> cls;
    std::vector<std::vector<uint8_t>> covered;  // covered[slot][vertex]
    std::vector<int> owner_slot;                // per ordered pair; -1: free or factor
    std::vector<Vertex> owner_third;
    long score = 0;

    HillClimb(int v_, const std::optional<OneFactor>& factor, Rng& r)
        : v(v_), slots(factor ? (v_ - 2) / 2 : (v_ - 1) / 2), full(v_ / 3),
          st(factor ? EdgeState::complete_minus_factor(v_, *factor)
                    : EdgeState::complete(v_)),
          rng(r), cls(slots), covered(slots, std::vector<uint8_t>(v_, 0)),
          owner_slot(static_cast<size_t>(v_) * v_, -1),
          owner_third(static_cast<size_t>(v_) * v_, -1) {}

    long target() const { return static_cast<long>(slots) * full; }

    void set_owner(Vertex a, Vertex b, int slot, Vertex w) {
        owner_slot[static_cast<size_t>(a) * v + b] = slot;
        owner_slot[static_cast<size_t>(b) * v + a] = slot;
        owner_third[static_cast<size_t>(a) * v + b] = w;
        owner_third[static_cast<size_t>(b) * v + a] = w;
    }

    void add_triangle(int i, Vertex a, Vertex b, Vertex c) {
        st.remove(a, b);
        st.remove(a, c);
        st.remove(b, c);
        set_owner(a, b, i, c);
        set_owner(a, c, i, b);
        set_owner(b, c, i, a);
        covered[i][a] = covered[i][b] = covered[i][c] = 1;
        cls[i].push_back(Block::triangle(a, b, c));
        score++;
    }

    void remove_triangle(int i, Vertex a, Vertex b, Vertex c) {
        st.add(a, b);
        st.add(a, c);
        st.add(b, c);
        set_owner(a, b, -1, -1);
        set_owner(a, c, -1, -1);
        set_owner(b, c, -1, -1);
        covered[i][a] = covered[i][b] = covered[i][c] = 0;
        const Block gone = Block::triangle(a, b, c);
        for (size_t k = 0; k < cls[i].size(); k++) {
            if (cls[i][k] == gone) {
                cls[i][k] = cls[i].back();
                cls[i].pop_back();
                score--;
                return;
            }
        }
        throw InternalError("hill climb removed a triangle it never placed");
    }

    // One randomized move; may be a no-op when the sampled spot is stuck.
    void step(std::vector<Vertex>& cand) {
        // Random non-full slot (counted choice keeps it uniform).
        int open = 0;
        for (int i = 0; i < slots; i++) {
            if (static_cast<int>(cls[i].size()) < full) open++;
        }
        int pick = rng.below(open);
        int slot = -1;
        for (int i = 0; i < slots; i++) {
            if (static_cast<int>(cls[i].size()) < full && pick-- == 0) {
                slot = i;
                break;
            }
        }

        // Random vertex x uncovered in that class, then two partners whose
        // edges to x are both live.
        const int uncov = v - 3 * static_cast<int>(cls[slot].size());
        pick = rng.below(uncov);
        Vertex x = -1;
        for (Vertex u = 0; u < v; u++) {
            if (!covered[slot][u] && pick-- == 0) {
                x = u;
                break;
            }
        }
        cand.clear();
        for (Vertex w = 0; w < v; w++) {
            if (w != x && !covered[slot][w] && st.has(x, w)) cand.push_back(w);
        }
        if (cand.size() < 2) return;
        const int iy = rng.below(static_cast<int>(cand.size()));
        int iz = rng.below(static_cast<int>(cand.size()) - 1);
        if (iz >= iy) iz++;
        const Vertex y = cand[iy], z = cand[iz];

        if (st.has(y, z)) {
            add_triangle(slot, x, y, z);
            return;
        }
        const int j = owner_slot[static_cast<size_t>(y) * v + z];
        if (j < 0) return;  // y-z is a factor pair: nothing to displace
        const Vertex w = owner_third[static_cast<size_t>(y) * v + z];
        remove_triangle(j, y, z, w);
        add_triangle(slot, x, y, z);  // equal score, reshaped configuration
    }
};

TripleSystem verified(TripleSystem ts, bool nearly) {
    Report rep = verify(to_decomposition(ts));
    if (!rep.accepted()) {
        throw InternalError("engine produced an invalid " + system_name(ts.v, nearly) + ": " +
                            rep.violations.front().render());
    }
    return ts;
}

TripleSystem search_system(int v, const std::optional<OneFactor>& factor,
                           const SearchLimits& limits, bool nearly) {
    Rng rng(limits.seed);
    std::optional<Clock::time_point> deadline;
    if (limits.time_limit_secs) {
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(*limits.time_limit_secs));
    }

    // The rotational construction settles most orders within milliseconds;
    // the climb below covers the orders it cannot express.
    if (auto rot = rotational_system(v, nearly, limits.seed, deadline)) {
        return verified(std::move(*rot), nearly);
    }

    const long stagnation_cap = 20000L + 400L * v;  // moves without a new best
    std::vector<Vertex> cand;
    cand.reserve(v);

    for (int restart = 0; restart <= limits.max_restarts; restart++) {
        HillClimb hc(v, factor, rng);

        // Greedy warm start: install whole classes while the randomized
        // greedy still lands them; the climb repairs the stalled tail.
        for (int i = 0; i < hc.slots; i++) {
            if (deadline && Clock::now() > *deadline) break;  // climb loop raises the timeout
            auto pc = find_parallel_class(hc.st, rng, limits.max_class_attempts);
            if (!pc) break;
            for (const Block& b : pc->blocks) hc.add_triangle(i, b.v0, b.v1, b.v2);
        }

        long best = 0;
        long since_best = 0;
        long moves = 0;

        while (hc.score < hc.target() && since_best <= stagnation_cap) {
            if ((++moves & 1023) == 0 && deadline && Clock::now() > *deadline) {
                throw TimeoutError("no " + system_name(v, nearly) +
                                   " found within the time limit");
            }
            hc.step(cand);
            if (hc.score > best) {
                best = hc.score;
                since_best = 0;
            } else {
                since_best++;
            }
        }

        if (hc.score == hc.target()) {
            TripleSystem ts{v, factor, {}};
            ts.classes.reserve(hc.cls.size());
            for (std::vector<Block>& blocks : hc.cls) {
                ts.classes.push_back({BlockKind::triangle, std::move(blocks)});
            }
            return verified(std::move(ts), nearly);
        }
        if (deadline && Clock::now() > *deadline) {
            throw TimeoutError("no " + system_name(v, nearly) + " found within the time limit");
        }
    }
    throw TimeoutError("no " + system_name(v, nearly) +
                       " found within the restart limit");
}

}  // namespace

TripleSystem build_kts(int v, const SearchLimits& limits) {
    if (v < 3 || v % 6 != 3) {
        throw InfeasibleError("KTS(v) exists only for v = 3 (mod 6); got v=" +
                              std::to_string(v));
    }
    const std::string name = "kts-" + std::to_string(v);
    if (has_bundled(name)) return adopt_bundled(v, name, false);
    return search_system(v, std::nullopt, limits, false);
}

TripleSystem build_nkts(int v, const SearchLimits& limits) {
    if (v < 6 || v % 6 != 0) {
        throw InfeasibleError("NKTS(v) requires v = 0 (mod 6); got v=" + std::to_string(v));
    }
    if (v == 6 || v == 12) {
        throw InfeasibleError("no NKTS(" + std::to_string(v) + ") exists");
    }
    const std::string name = "nkts-" + std::to_string(v);
    if (has_bundled(name)) return adopt_bundled(v, name, true);

    OneFactor factor;
    factor.pairs.reserve(v / 2);
    for (int i = 0; i < v / 2; i++) factor.pairs.emplace_back(2 * i, 2 * i + 1);
    return search_system(v, factor, limits, true);
}

}  // namespace urd
