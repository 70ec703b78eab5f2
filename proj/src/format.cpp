#include "urd/format.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace urd {

namespace {

// Character-level cursor with 1-based line/column tracking.
struct Cursor {
    std::string_view text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    bool at_end() const { return pos >= text.size(); }

    char peek() const { return at_end() ? '\0' : text[pos]; }

    char advance() {
        char c = text[pos++];
        if (c == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
        return c;
    }

    void expect(char c, const char* what) {
        if (at_end() || peek() != c) fail(std::string("expected ") + what);
        advance();
    }

    void expect_literal(std::string_view lit) {
        for (char c : lit) {
            if (at_end() || peek() != c) fail("expected \"" + std::string(lit) + "\"");
            advance();
        }
    }

    void expect_newline() {
        if (at_end()) fail("expected end of line, got end of file");
        if (peek() == '\r') fail("CR line endings are not allowed (LF only)");
        if (peek() != '\n') fail("expected end of line");
        advance();
    }

    // Non-negative decimal integer, no sign, no leading zeros.
    int read_int(const char* what) {
        if (at_end() || peek() < '0' || peek() > '9') fail(std::string("expected ") + what);
        long value = 0;
        char first = peek();
        int digits = 0;
        while (!at_end() && peek() >= '0' && peek() <= '9') {
            value = value * 10 + (advance() - '0');
            digits++;
            if (value > 1000000) fail(std::string(what) + " out of range");
        }
        if (digits > 1 && first == '0') fail(std::string(what) + " has a leading zero");
        return static_cast<int>(value);
    }
};

Vertex read_vertex(Cursor& cur, int v) {
    int line = cur.line, col = cur.col;
    int x = cur.read_int("vertex");
    if (x >= v) {
        throw StructureError("vertex " + std::to_string(x) + " out of range [0," +
                             std::to_string(v) + ") at " + std::to_string(line) + ":" +
                             std::to_string(col));
    }
    return x;
}

Block read_block(Cursor& cur, BlockKind kind, int v) {
    cur.expect('(', "'('");
    Vertex a = read_vertex(cur, v);
    if (kind == BlockKind::path) {
        cur.expect(';', "';'");
        Vertex x = read_vertex(cur, v);
        cur.expect(',', "','");
        Vertex y = read_vertex(cur, v);
        cur.expect(')', "')'");
        return Block::path(a, x, y);
    }
    cur.expect(',', "','");
    Vertex b = read_vertex(cur, v);
    cur.expect(',', "','");
    Vertex c = read_vertex(cur, v);
    cur.expect(')', "')'");
    return Block::triangle(a, b, c);
}

}  // namespace

Decomposition parse_decomposition(std::string_view text) {
    Cursor cur{text};

    cur.expect_literal("urd-text v1");
    cur.expect_newline();

    cur.expect_literal("v=");
    int v = cur.read_int("v");
    cur.expect(' ', "' '");
    cur.expect_literal("graph=");
    GraphKind kind;
    if (cur.text.substr(cur.pos, 8) == "complete") {
        cur.expect_literal("complete");
        kind = GraphKind::complete;
    } else if (cur.text.substr(cur.pos, 16) == "minus-one-factor") {
        cur.expect_literal("minus-one-factor");
        kind = GraphKind::minus_one_factor;
    } else {
        cur.fail("expected graph=complete or graph=minus-one-factor");
    }
    cur.expect(' ', "' '");
    cur.expect_literal("r=");
    int r = cur.read_int("r");
    cur.expect(' ', "' '");
    cur.expect_literal("s=");
    int s = cur.read_int("s");
    cur.expect_newline();

    if (v < 3) throw StructureError("v=" + std::to_string(v) + " is too small (need v >= 3)");
    if (v % 3 != 0) throw StructureError("v=" + std::to_string(v) + " is not divisible by 3");
    if (v > kMaxV) throw StructureError("v=" + std::to_string(v) + " exceeds supported maximum " +
                                        std::to_string(kMaxV));
    bool even = v % 2 == 0;
    if (even && kind != GraphKind::minus_one_factor) {
        throw StructureError("even v requires graph=minus-one-factor");
    }
    if (!even && kind != GraphKind::complete) {
        throw StructureError("odd v requires graph=complete");
    }

    Decomposition d;
    d.v = v;
    d.graph_kind = kind;

    if (kind == GraphKind::minus_one_factor &&
        cur.text.substr(cur.pos, 7) != "factor:") {
        throw StructureError("even v requires a factor: line after the header");
    }
    if (kind == GraphKind::complete && cur.text.substr(cur.pos, 7) == "factor:") {
        throw StructureError("odd v must not carry a factor: line");
    }

    if (kind == GraphKind::minus_one_factor) {
        cur.expect_literal("factor:");
        OneFactor f;
        std::vector<int> seen(v, 0);
        for (int i = 0; i < v / 2; i++) {
            cur.expect(' ', "' '");
            Vertex lo = read_vertex(cur, v);
            cur.expect('-', "'-'");
            Vertex hi = read_vertex(cur, v);
            Edge e(lo, hi);
            seen[e.lo]++;
            seen[e.hi]++;
            f.pairs.push_back(e);
        }
        cur.expect_newline();
        for (int u = 0; u < v; u++) {
            if (seen[u] != 1) {
                throw StructureError("factor covers vertex " + std::to_string(u) + " " +
                                     std::to_string(seen[u]) + " times");
            }
        }
        std::sort(f.pairs.begin(), f.pairs.end());
        d.factor = std::move(f);
    }

    auto read_class = [&](BlockKind class_kind) {
        ParallelClass pc;
        pc.kind = class_kind;
        std::vector<int> seen(v, 0);
        while (!cur.at_end() && cur.peek() == ' ') {
            cur.advance();
            Block b = read_block(cur, class_kind, v);
            seen[b.v0]++;
            seen[b.v1]++;
            seen[b.v2]++;
            pc.blocks.push_back(b);
        }
        if (static_cast<int>(pc.blocks.size()) != v / 3) {
            throw StructureError("class on line " + std::to_string(cur.line) + " has " +
                                 std::to_string(pc.blocks.size()) + " blocks, expected v/3=" +
                                 std::to_string(v / 3));
        }
        cur.expect_newline();
        for (int u = 0; u < v; u++) {
            if (seen[u] != 1) {
                throw StructureError("class on line " + std::to_string(cur.line - 1) +
                                     " covers vertex " + std::to_string(u) + " " +
                                     std::to_string(seen[u]) + " times");
            }
        }
        std::sort(pc.blocks.begin(), pc.blocks.end(), [](const Block& a, const Block& b) {
            return a.min_vertex() < b.min_vertex();
        });
        d.classes.push_back(std::move(pc));
    };

    for (int i = 0; i < r; i++) {
        cur.expect_literal("class path:");
        read_class(BlockKind::path);
    }
    for (int i = 0; i < s; i++) {
        cur.expect_literal("class triangle:");
        read_class(BlockKind::triangle);
    }

    if (!cur.at_end()) cur.fail("trailing content after last class line");
    return d;
}

std::string serialize_decomposition(const Decomposition& d) {
    if (d.v < 3 || d.v % 3 != 0) {
        throw StructureError("cannot serialize decomposition with v=" + std::to_string(d.v));
    }
    bool even = d.v % 2 == 0;
    if (even != (d.graph_kind == GraphKind::minus_one_factor)) {
        throw StructureError("graph kind does not match parity of v");
    }
    if (even && (!d.factor || static_cast<int>(d.factor->pairs.size()) != d.v / 2)) {
        throw StructureError("minus-one-factor decomposition needs a factor of v/2 pairs");
    }
    if (!even && d.factor) {
        throw StructureError("complete decomposition must not carry a factor");
    }

    Decomposition c = canonical_form(d);
    auto [r, s] = count_classes(c);

    std::string out;
    out += "urd-text v1\n";
    out += "v=" + std::to_string(c.v);
    out += even ? " graph=minus-one-factor" : " graph=complete";
    out += " r=" + std::to_string(r) + " s=" + std::to_string(s) + "\n";
    if (c.factor) {
        out += "factor:";
        for (const Edge& e : c.factor->pairs) {
            out += " " + std::to_string(e.lo) + "-" + std::to_string(e.hi);
        }
        out += "\n";
    }
    for (const ParallelClass& pc : c.classes) {
        out += pc.kind == BlockKind::path ? "class path:" : "class triangle:";
        for (const Block& b : pc.blocks) {
            if (pc.kind != b.kind) throw StructureError("class contains a block of the wrong kind");
            if (b.kind == BlockKind::path) {
                out += " (" + std::to_string(b.v0) + ";" + std::to_string(b.v1) + "," +
                       std::to_string(b.v2) + ")";
            } else {
                out += " (" + std::to_string(b.v0) + "," + std::to_string(b.v1) + "," +
                       std::to_string(b.v2) + ")";
            }
        }
        out += "\n";
    }
    return out;
}

}  // namespace urd
