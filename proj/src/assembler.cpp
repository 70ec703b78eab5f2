#include "urd/assembler.hpp"

#include <string>
#include <utility>

#include "urd/bundled.hpp"
#include "urd/path_transform.hpp"
#include "urd/spectrum.hpp"
#include "urd/verifier.hpp"

namespace urd {

Decomposition build_urd(const BuildRequest& req) {
    const int v = req.v;
    const int r = req.r;
    const int s = req.s;

    Diagnosis diag = check_point(v, r, s);
    if (diag != Diagnosis::accept) {
        throw InfeasibleError("(v,r,s)=(" + std::to_string(v) + "," + std::to_string(r) + "," +
                              std::to_string(s) + ") is not admissible: " + to_string(diag));
    }

    Decomposition d;
    if (v == 6 || v == 12) {
        // Sporadic orders ship as explicit designs; no NKTS exists to transform.
        d = load_bundled("urd-" + std::to_string(v) + "-" + std::to_string(r) + "-" +
                         std::to_string(s));
    } else {
        TripleSystem ts =
            v % 2 == 1 ? build_kts(v, req.limits) : build_nkts(v, req.limits);

        d.v = v;
        d.graph_kind = ts.factor ? GraphKind::minus_one_factor : GraphKind::complete;
        d.factor = std::move(ts.factor);

        // Consecutive pairs (R_2i+1, R_2i+2) become three path classes each.
        const int x = r / 3;
        for (int i = 0; i < x; i++) {
            auto paths = transform_pair(ts.classes[2 * i], ts.classes[2 * i + 1]);
            for (ParallelClass& pc : paths) d.classes.push_back(std::move(pc));
        }
        for (size_t k = 2 * static_cast<size_t>(x); k < ts.classes.size(); k++) {
            d.classes.push_back(std::move(ts.classes[k]));
        }
    }

    Report rep = verify_request(d, v, r, s);
    if (!rep.accepted()) {
        throw InternalError("assembled decomposition is invalid: " +
                            rep.violations.front().render());
    }
    return d;
}

}  // namespace urd
