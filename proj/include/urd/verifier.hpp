// Total, independent validation of decompositions. Recomputes the edge
// multiset from scratch: never calls the engine, transform or assembler.
#pragma once

#include <string>
#include <vector>

#include "urd/design.hpp"

namespace urd {

enum class ViolationCode {
    bad_vertex_range,
    non_uniform_class,
    not_a_partition,
    wrong_class_size,
    edge_repeated,
    edge_missing,
    edge_in_factor,
    bad_factor,
    parity_mismatch,
    header_mismatch,
};

std::string to_string(ViolationCode code);

struct Violation {
    ViolationCode code;
    std::string detail;
    int class_index = -1;  // -1: not tied to a class

    std::string render() const;  // "<Code> <detail>" with the locus inlined
};

struct Report {
    std::vector<Violation> violations;  // capped at 100
    bool accepted() const { return violations.empty(); }
};

// Accept iff d is a well-formed uniformly resolvable decomposition of K_v
// (v odd) or K_v minus its factor (v even): every class a uniform vertex
// partition into v/3 blocks, and the block edges cover each host edge
// exactly once. Problems are reported, never thrown.
Report verify(const Decomposition& d);

// verify plus header expectations: d.v == v and class counts == (r, s).
Report verify_request(const Decomposition& d, int v, int r, int s);

}  // namespace urd
