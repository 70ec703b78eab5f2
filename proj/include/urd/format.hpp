// urd-text v1: the bit-exact decomposition file format.
//
//   urd-text v1
//   v=<int> graph=<complete|minus-one-factor> r=<int> s=<int>
//   factor: <lo>-<hi> <lo>-<hi> ...        (iff minus-one-factor; v/2 pairs)
//   class path: (c;x,y) (c;x,y) ...        (r lines)
//   class triangle: (a,b,c) (a,b,c) ...    (s lines)
//
// UTF-8, LF line endings, single spaces, no trailing whitespace, final LF.
#pragma once

#include <string>
#include <string_view>

#include "urd/design.hpp"

namespace urd {

// Strict parse. Checks structural invariants of every type (ranges, class
// sizes, vertex partitions, factor shape) but not the edge partition; that
// is the verifier's job. Throws ParseError (syntax) or StructureError.
Decomposition parse_decomposition(std::string_view text);

// Deterministic, bit-exact serialization of canonical_form(d).
// parse_decomposition(serialize_decomposition(d)) == canonical_form(d).
std::string serialize_decomposition(const Decomposition& d);

}  // namespace urd
