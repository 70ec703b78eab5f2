// Admissible spectrum I(v) and the counting-based point diagnosis.
#pragma once

#include <string>
#include <vector>

#include "urd/design.hpp"

namespace urd {

struct SpectrumPoint {
    int r = 0;  // path classes, always a multiple of 3
    int s = 0;  // triangle classes
    auto operator<=>(const SpectrumPoint&) const = default;
};

struct Spectrum {
    int v = 0;
    std::vector<SpectrumPoint> points;  // ascending r
};

// 2r + 3s for any decomposition: 3(v-1)/2 for odd v, 3(v-2)/2 for even v.
// Throws InfeasibleError unless v >= 3 and v % 3 == 0.
int edge_budget(int v);

// The full admissible set I(v). Special cases: I(6)={(3,0)}, I(12)={(3,3),(6,1)}.
Spectrum admissible_spectrum(int v);

// check_point reports the first failing condition in this fixed order.
enum class Diagnosis {
    accept,
    not_divisible_by_3,
    edge_budget_violated,
    r_not_multiple_of_3,
    parity_of_s,
    known_nonexistent,  // (6,0,2) and (12,0,5): no NKTS(6) or NKTS(12)
};

// Total: never throws. Accept iff (r,s) is in admissible_spectrum(v).
Diagnosis check_point(int v, int r, int s);

std::string to_string(Diagnosis d);

}  // namespace urd
