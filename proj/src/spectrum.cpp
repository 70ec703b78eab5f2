#include "urd/spectrum.hpp"

namespace urd {

static void check_v(int v) {
    if (v % 3 != 0) {
        throw InfeasibleError("v=" + std::to_string(v) + " is not divisible by 3");
    }
    if (v < 3) {
        throw InfeasibleError("v=" + std::to_string(v) + " is too small (need v >= 3)");
    }
}

int edge_budget(int v) {
    check_v(v);
    return v % 2 == 1 ? 3 * (v - 1) / 2 : 3 * (v - 2) / 2;
}

Spectrum admissible_spectrum(int v) {
    check_v(v);
    Spectrum sp;
    sp.v = v;
    if (v == 6) {
        sp.points = {{3, 0}};
        return sp;
    }
    if (v == 12) {
        sp.points = {{3, 3}, {6, 1}};
        return sp;
    }
    // s = (v-1)/2 - 2x for odd v, (v-2)/2 - 2x for even v; the x range per
    // residue class mod 12 is exactly where s stays non-negative.
    int base = v % 2 == 1 ? (v - 1) / 2 : (v - 2) / 2;
    int max_x;
    switch (v % 12) {
        case 0: max_x = (v - 4) / 4; break;
        case 6: max_x = (v - 2) / 4; break;
        case 3: max_x = (v - 3) / 4; break;
        default: max_x = (v - 1) / 4; break;  // v = 9 (mod 12)
    }
    for (int x = 0; x <= max_x; x++) {
        sp.points.push_back({3 * x, base - 2 * x});
    }
    return sp;
}

Diagnosis check_point(int v, int r, int s) {
    if (v % 3 != 0) return Diagnosis::not_divisible_by_3;
    long budget = v % 2 == 1 ? 3L * (v - 1) / 2 : 3L * (v - 2) / 2;
    if (r < 0 || s < 0 || 2L * r + 3L * s != budget) return Diagnosis::edge_budget_violated;
    if (r % 3 != 0) return Diagnosis::r_not_multiple_of_3;
    // s == budget (mod 2) follows from the budget equation, so this reason
    // only guards future formula edits.
    bool s_odd_required = v % 12 == 3 || v % 12 == 0;
    if ((s % 2 == 1) != s_odd_required) return Diagnosis::parity_of_s;
    if ((v == 6 && r == 0 && s == 2) || (v == 12 && r == 0 && s == 5)) {
        return Diagnosis::known_nonexistent;
    }
    return Diagnosis::accept;
}

std::string to_string(Diagnosis d) {
    switch (d) {
        case Diagnosis::accept: return "Accept";
        case Diagnosis::not_divisible_by_3: return "NotDivisibleBy3";
        case Diagnosis::edge_budget_violated: return "EdgeBudgetViolated";
        case Diagnosis::r_not_multiple_of_3: return "RNotMultipleOf3";
        case Diagnosis::parity_of_s: return "ParityOfS";
        case Diagnosis::known_nonexistent: return "KnownNonexistent";
    }
    return "?";
}

}  // namespace urd
