// Independent exhaustive search for tiny v: decides realizability of every
// counting-admissible (r, s) by backtracking over parallel classes. Used
// to re-derive the exceptional facts (no Table 1 knowledge involved).
#pragma once

#include <vector>

#include "urd/spectrum.hpp"
#include "urd/triple_engine.hpp"

namespace urd {

struct OracleResult {
    int v = 0;
    std::vector<SpectrumPoint> points;  // realizable pairs found, ascending r
    bool exhausted = false;             // true: points == URD(v) exactly
};

// Tries every (r, s) with r, s >= 0 and 2r + 3s = edge_budget(v). Symmetry
// reductions (all relabeling arguments): even v fixes the factor {2i,2i+1};
// odd v fixes the whole first class; even v with s >= 1 fixes the first
// triangle block (0,2,4); same-kind classes are built in increasing
// lexicographic order. Only budget.time_limit_secs is consulted; when the
// limit strikes, the undecided candidates are dropped and exhausted=false.
// Throws InfeasibleError for v < 3, v not a multiple of 3, or v > 63
// (far beyond exhaustive reach anyway).
OracleResult oracle_spectrum(int v, const SearchLimits& budget);

}  // namespace urd
