#include "urd/oracle.hpp"

#include <bit>
#include <chrono>
#include <optional>
#include <string>

namespace urd {

namespace {

using Clock = std::chrono::steady_clock;

OneFactor fixed_factor(int v) {
    OneFactor f;
    f.pairs.reserve(v / 2);
    for (int i = 0; i < v / 2; i++) f.pairs.emplace_back(2 * i, 2 * i + 1);
    return f;
}

// Exhaustive existence search for one (r, s). Class order: the s triangle
// classes first, then the r path classes; same-kind classes strictly
// increasing in block-sequence lexicographic order. Each class is built
// block by block at the least uncovered vertex, candidates in increasing
// Block order, so classes emerge canonically sorted.
class ExistsSearch {
public:
    ExistsSearch(int v, int r, int s, std::optional<Clock::time_point> deadline)
        : v_(v), r_(r), s_(s), total_(r + s), even_(v % 2 == 0), deadline_(deadline),
          st_(even_ ? EdgeState::complete_minus_factor(v, fixed_factor(v))
                    : EdgeState::complete(v)) {
        full_mask_ = v == 64 ? ~uint64_t{0} : (uint64_t{1} << v) - 1;
    }

    std::optional<bool> run() {
        classes_.assign(total_, {});
        bool found = search_class(0);
        if (budget_hit_) return std::nullopt;
        return found;
    }

private:
    uint64_t neighbors(Vertex u) const { return st_.row(u)[0]; }

    bool tick() {
        if ((++nodes_ & 1023) == 0 && deadline_ && Clock::now() > *deadline_) {
            budget_hit_ = true;
        }
        return budget_hit_;
    }

    void place(const Block& b) { st_.remove_block(b); }
    void unplace(const Block& b) { st_.add_block(b); }

    bool place_fixed_first(std::vector<Block> blocks) {
        for (const Block& b : blocks) place(b);
        classes_[0] = std::move(blocks);
        bool found = search_class(1);
        for (const Block& b : classes_[0]) unplace(b);
        classes_[0].clear();
        return found;
    }

    // Class-boundary feasibility: with T triangle and P path classes still
    // to build, exact edge count and every free degree in [2T+P, 2T+2P].
    bool boundary_ok(int T, int P) const {
        if (st_.edges_left != static_cast<long>(T) * v_ + static_cast<long>(P) * (2 * v_ / 3)) {
            return false;
        }
        const int lo = 2 * T + P;
        const int hi = 2 * T + 2 * P;
        for (Vertex u = 0; u < v_; u++) {
            const int deg = std::popcount(neighbors(u));
            if (deg < lo || deg > hi) return false;
        }
        return true;
    }

    bool search_class(int idx) {
        if (budget_hit_) return false;
        const int T = s_ > idx ? s_ - idx : 0;
        const int P = total_ - idx - T;
        if (!boundary_ok(T, P)) return false;
        if (idx == total_) return true;

        if (idx == 0 && !even_ && s_ >= 1) {
            std::vector<Block> t0;
            for (int i = 0; i < v_ / 3; i++) {
                t0.push_back(Block::triangle(3 * i, 3 * i + 1, 3 * i + 2));
            }
            return place_fixed_first(std::move(t0));
        }
        if (idx == 0 && !even_ && s_ == 0) {
            std::vector<Block> p0;
            for (int i = 0; i < v_ / 3; i++) {
                p0.push_back(Block::path(3 * i, 3 * i + 1, 3 * i + 2));
            }
            return place_fixed_first(std::move(p0));
        }

        const bool tight = idx >= 1 && idx != s_;  // previous class has the same kind
        return extend_class(idx, full_mask_, tight);
    }

    // Tries every block containing the least uncovered vertex, in
    // increasing Block order; `tight` tracks equality with the previous
    // same-kind class for the lexicographic constraint.
    bool extend_class(int idx, uint64_t uncovered, bool tight) {
        if (budget_hit_) return false;
        std::vector<Block>& cur = classes_[idx];
        if (uncovered == 0) {
            if (tight) return false;  // equal classes are never edge-disjoint
            return search_class(idx + 1);
        }
        const Vertex u = std::countr_zero(uncovered);
        const Block* prev =
            tight ? &classes_[idx - 1][cur.size()] : nullptr;

        auto try_block = [&](const Block& b, uint64_t members) -> std::optional<bool> {
            bool next_tight = false;
            if (prev != nullptr) {
                if (b < *prev) return std::nullopt;  // keep scanning
                next_tight = (b == *prev);
            }
            if (tick()) return false;
            place(b);
            cur.push_back(b);
            const bool found = extend_class(idx, uncovered & ~members, next_tight);
            cur.pop_back();
            unplace(b);
            if (found || budget_hit_) return found;
            return std::nullopt;
        };

        auto bit = [](Vertex x) { return uint64_t{1} << x; };

        // Even v, s >= 1: fix the first triangle block to (0,2,4), the
        // least factor-avoiding triangle through vertex 0 (sound: an
        // F-preserving relabeling can always put one there).
        if (even_ && idx == 0 && s_ >= 1 && cur.empty()) {
            if (auto res = try_block(Block::triangle(0, 2, 4), bit(0) | bit(2) | bit(4))) {
                return *res;
            }
            return false;
        }

        if (idx < s_) {  // triangle class
            const uint64_t cand = neighbors(u) & uncovered;
            for (uint64_t ma = cand; ma;) {
                const Vertex a = std::countr_zero(ma);
                ma &= ma - 1;
                uint64_t mb = neighbors(a) & cand & ~((bit(a) << 1) - 1);
                while (mb) {
                    const Vertex b = std::countr_zero(mb);
                    mb &= mb - 1;
                    if (auto res = try_block(Block::triangle(u, a, b), bit(u) | bit(a) | bit(b))) {
                        return *res;
                    }
                }
            }
        } else {  // path class: u as center, then u as an end
            const uint64_t cand = neighbors(u) & uncovered;
            for (uint64_t mx = cand; mx;) {
                const Vertex x = std::countr_zero(mx);
                mx &= mx - 1;
                uint64_t my = cand & ~((bit(x) << 1) - 1);
                while (my) {
                    const Vertex y = std::countr_zero(my);
                    my &= my - 1;
                    if (auto res = try_block(Block::path(u, x, y), bit(u) | bit(x) | bit(y))) {
                        return *res;
                    }
                }
            }
            for (uint64_t mc = cand; mc;) {
                const Vertex c = std::countr_zero(mc);
                mc &= mc - 1;
                uint64_t mw = neighbors(c) & uncovered & ~bit(u);
                while (mw) {
                    const Vertex w = std::countr_zero(mw);
                    mw &= mw - 1;
                    if (auto res = try_block(Block::path(c, u, w), bit(u) | bit(c) | bit(w))) {
                        return *res;
                    }
                }
            }
        }
        return false;
    }

    int v_, r_, s_, total_;
    bool even_;
    std::optional<Clock::time_point> deadline_;
    EdgeState st_;
    uint64_t full_mask_ = 0;
    std::vector<std::vector<Block>> classes_;
    long nodes_ = 0;
    bool budget_hit_ = false;
};

}  // namespace

OracleResult oracle_spectrum(int v, const SearchLimits& budget) {
    if (v < 3 || v % 3 != 0) {
        throw InfeasibleError("oracle requires v >= 3 with v = 0 (mod 3); got v=" +
                              std::to_string(v));
    }
    if (v > 63) {
        throw InfeasibleError("oracle supports v <= 63 only; got v=" + std::to_string(v));
    }

    const int budget_edges = edge_budget(v);
    std::optional<Clock::time_point> deadline;
    if (budget.time_limit_secs) {
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(*budget.time_limit_secs));
    }

    OracleResult res;
    res.v = v;
    res.exhausted = true;
    for (int r = 0; 2 * r <= budget_edges; r++) {
        if ((budget_edges - 2 * r) % 3 != 0) continue;  // counting-admissible only
        const int s = (budget_edges - 2 * r) / 3;
        ExistsSearch search(v, r, s, deadline);
        std::optional<bool> decided = search.run();
        if (!decided) {
            res.exhausted = false;
            break;
        }
        if (*decided) res.points.push_back({r, s});
    }
    return res;
}

}  // namespace urd
