// Produces a full URD certificate for any admissible (v, r, s): bundled
// designs for v in {6, 12}, otherwise a triple system with x = r/3
// consecutive class pairs pushed through the path transform.
#pragma once

#include "urd/design.hpp"
#include "urd/triple_engine.hpp"

namespace urd {

struct BuildRequest {
    int v = 0;
    int r = 0;
    int s = 0;
    SearchLimits limits;
};

// Throws InfeasibleError when check_point(v,r,s) rejects (the diagnosis is
// in the message) and propagates TimeoutError from the engine. The result
// has exactly r path classes and s triangle classes and passes verify —
// re-checked internally before returning.
Decomposition build_urd(const BuildRequest& req);

}  // namespace urd
