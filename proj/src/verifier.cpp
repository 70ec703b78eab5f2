#include "urd/verifier.hpp"

#include <algorithm>

namespace urd {

namespace {

constexpr int kMaxViolations = 100;

struct Collector {
    std::vector<Violation>& out;

    void add(ViolationCode code, std::string detail, int class_index = -1) {
        if (static_cast<int>(out.size()) < kMaxViolations) {
            out.push_back({code, std::move(detail), class_index});
        }
    }
};

std::string edge_str(Vertex a, Vertex b) {
    return std::to_string(std::min(a, b)) + "-" + std::to_string(std::max(a, b));
}

}  // namespace

std::string to_string(ViolationCode code) {
    switch (code) {
        case ViolationCode::bad_vertex_range: return "BadVertexRange";
        case ViolationCode::non_uniform_class: return "NonUniformClass";
        case ViolationCode::not_a_partition: return "NotAPartition";
        case ViolationCode::wrong_class_size: return "WrongClassSize";
        case ViolationCode::edge_repeated: return "EdgeRepeated";
        case ViolationCode::edge_missing: return "EdgeMissing";
        case ViolationCode::edge_in_factor: return "EdgeInFactor";
        case ViolationCode::bad_factor: return "BadFactor";
        case ViolationCode::parity_mismatch: return "ParityMismatch";
        case ViolationCode::header_mismatch: return "HeaderMismatch";
    }
    return "?";
}

std::string Violation::render() const {
    std::string s = to_string(code);
    if (class_index >= 0) s += " class " + std::to_string(class_index);
    s += ": " + detail;
    return s;
}

Report verify(const Decomposition& d) {
    Report report;
    Collector c{report.violations};
    const int v = d.v;

    if (v < 3 || v % 3 != 0) {
        c.add(ViolationCode::parity_mismatch,
              "v=" + std::to_string(v) + " is not a multiple of 3 with v >= 3");
        return report;
    }
    if (v > kMaxV) {
        c.add(ViolationCode::bad_vertex_range,
              "v=" + std::to_string(v) + " exceeds supported maximum " + std::to_string(kMaxV));
        return report;
    }

    const bool even = v % 2 == 0;
    if (even && d.graph_kind != GraphKind::minus_one_factor) {
        c.add(ViolationCode::parity_mismatch, "even v requires graph=minus-one-factor");
        return report;
    }
    if (!even && d.graph_kind != GraphKind::complete) {
        c.add(ViolationCode::parity_mismatch, "odd v requires graph=complete");
        return report;
    }
    if (even && !d.factor) {
        c.add(ViolationCode::bad_factor, "minus-one-factor decomposition has no factor");
        return report;
    }
    if (!even && d.factor) {
        c.add(ViolationCode::bad_factor, "complete decomposition carries a factor");
        return report;
    }

    auto in_range = [v](Vertex u) { return u >= 0 && u < v; };

    // pair_state[lo*v+hi]: 0 free, 1 factor edge, >=2 seen (1+count) in blocks.
    std::vector<uint8_t> pair_state(static_cast<size_t>(v) * v, 0);
    bool factor_ok = true;

    if (d.factor) {
        std::vector<int> cover(v, 0);
        if (static_cast<int>(d.factor->pairs.size()) != v / 2) {
            c.add(ViolationCode::bad_factor,
                  "factor has " + std::to_string(d.factor->pairs.size()) + " pairs, expected " +
                      std::to_string(v / 2));
            factor_ok = false;
        }
        for (const Edge& e : d.factor->pairs) {
            if (!in_range(e.lo) || !in_range(e.hi)) {
                c.add(ViolationCode::bad_vertex_range, "factor pair " + edge_str(e.lo, e.hi) +
                                                           " out of range [0," + std::to_string(v) + ")");
                factor_ok = false;
                continue;
            }
            if (e.lo >= e.hi) {
                c.add(ViolationCode::bad_factor, "factor pair " + std::to_string(e.lo) + "-" +
                                                     std::to_string(e.hi) + " is not normalized lo<hi");
                factor_ok = false;
                continue;
            }
            cover[e.lo]++;
            cover[e.hi]++;
            pair_state[static_cast<size_t>(e.lo) * v + e.hi] = 1;
        }
        if (factor_ok) {
            for (int u = 0; u < v; u++) {
                if (cover[u] != 1) {
                    c.add(ViolationCode::bad_factor, "factor covers vertex " + std::to_string(u) +
                                                         " " + std::to_string(cover[u]) + " times");
                    factor_ok = false;
                }
            }
        }
    }

    for (size_t ci = 0; ci < d.classes.size(); ci++) {
        const ParallelClass& pc = d.classes[ci];
        const int idx = static_cast<int>(ci);

        if (static_cast<int>(pc.blocks.size()) != v / 3) {
            c.add(ViolationCode::wrong_class_size,
                  "has " + std::to_string(pc.blocks.size()) + " blocks, expected " +
                      std::to_string(v / 3),
                  idx);
        }

        std::vector<int> cover(v, 0);
        bool class_clean = true;
        for (const Block& b : pc.blocks) {
            if (b.kind != pc.kind) {
                c.add(ViolationCode::non_uniform_class,
                      std::string("contains a ") +
                          (b.kind == BlockKind::path ? "path" : "triangle") + " block in a " +
                          (pc.kind == BlockKind::path ? "path" : "triangle") + " class",
                      idx);
            }
            bool range_ok = in_range(b.v0) && in_range(b.v1) && in_range(b.v2);
            if (!range_ok) {
                c.add(ViolationCode::bad_vertex_range,
                      "block (" + std::to_string(b.v0) + "," + std::to_string(b.v1) + "," +
                          std::to_string(b.v2) + ") has a vertex outside [0," + std::to_string(v) +
                          ")",
                      idx);
                class_clean = false;
                continue;
            }
            if (b.v0 == b.v1 || b.v0 == b.v2 || b.v1 == b.v2) {
                c.add(ViolationCode::not_a_partition,
                      "block (" + std::to_string(b.v0) + "," + std::to_string(b.v1) + "," +
                          std::to_string(b.v2) + ") repeats a vertex",
                      idx);
                class_clean = false;
                continue;
            }
            cover[b.v0]++;
            cover[b.v1]++;
            cover[b.v2]++;

            // Tally the block's edges into the global pair table.
            for (const Edge& e : block_edges(b)) {
                uint8_t& st = pair_state[static_cast<size_t>(e.lo) * v + e.hi];
                if (st == 1) {
                    c.add(ViolationCode::edge_in_factor,
                          "edge " + edge_str(e.lo, e.hi) + " is a factor pair", idx);
                } else if (st >= 2) {
                    c.add(ViolationCode::edge_repeated,
                          "edge " + edge_str(e.lo, e.hi) + " already used by an earlier block", idx);
                    if (st < 255) st++;
                } else {
                    st = 2;
                }
            }
        }
        if (class_clean) {
            for (int u = 0; u < v; u++) {
                if (cover[u] != 1) {
                    c.add(ViolationCode::not_a_partition,
                          "vertex " + std::to_string(u) + " appears in " +
                              std::to_string(cover[u]) + " blocks",
                          idx);
                }
            }
        }
    }

    // Every non-factor pair must have been used exactly once. A broken
    // factor leaves the host graph undefined, so skip the sweep then: the
    // report already rejects, and missing-edge noise would only bury the
    // real problem.
    if (factor_ok) {
        for (Vertex a = 0; a < v; a++) {
            for (Vertex b = a + 1; b < v; b++) {
                uint8_t st = pair_state[static_cast<size_t>(a) * v + b];
                if (st == 0) {
                    c.add(ViolationCode::edge_missing,
                          "edge " + edge_str(a, b) + " is not covered");
                }
            }
        }
    }
    return report;
}

Report verify_request(const Decomposition& d, int v, int r, int s) {
    Report report = verify(d);
    Collector c{report.violations};
    if (d.v != v) {
        c.add(ViolationCode::header_mismatch,
              "decomposition has v=" + std::to_string(d.v) + ", expected v=" + std::to_string(v));
    }
    auto [have_r, have_s] = count_classes(d);
    if (have_r != r || have_s != s) {
        c.add(ViolationCode::header_mismatch,
              "decomposition has (r,s)=(" + std::to_string(have_r) + "," +
                  std::to_string(have_s) + "), expected (" + std::to_string(r) + "," +
                  std::to_string(s) + ")");
    }
    return report;
}

}  // namespace urd
