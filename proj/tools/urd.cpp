// urd: build, verify, and explore uniformly resolvable {P3,K3}
// decompositions of K_v (v odd) and K_v minus a one-factor (v even).
//
// Exit codes: 0 success/accept, 1 verification reject, 2 I/O or parse
// error, 3 infeasible or invalid request, 4 search timeout, 64 usage,
// 70 internal error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "urd/assembler.hpp"
#include "urd/format.hpp"
#include "urd/oracle.hpp"
#include "urd/path_transform.hpp"
#include "urd/spectrum.hpp"
#include "urd/verifier.hpp"

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitIo = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitTimeout = 4;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        if (std::cin.bad()) throw IoError("failed to read stdin");
        return std::move(buf).str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed to read '" + path + "'");
    return std::move(buf).str();
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path == "-") {
        std::cout << bytes;
        std::cout.flush();
        if (std::cout.bad()) throw IoError("failed to write stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << bytes;
    out.flush();
    if (out.bad()) throw IoError("failed to write '" + path + "'");
}

urd::SearchLimits make_limits(uint64_t seed, int max_restarts, int max_class_attempts,
                              double time_limit_secs) {
    urd::SearchLimits limits;
    limits.seed = seed;
    limits.max_restarts = max_restarts;
    limits.max_class_attempts = max_class_attempts;
    if (time_limit_secs > 0) {
        limits.time_limit_secs = time_limit_secs;
    } else {
        limits.time_limit_secs = std::nullopt;  // 0 means unlimited
    }
    return limits;
}

int run_spectrum(int v) {
    urd::Spectrum spec = urd::admissible_spectrum(v);
    std::string out;
    for (const urd::SpectrumPoint& p : spec.points) {
        out += std::to_string(p.r) + " " + std::to_string(p.s) + "\n";
    }
    std::cout << out;
    return kExitAccept;
}

int run_build(int v, int r, int s, const urd::SearchLimits& limits, const std::string& out_path) {
    urd::BuildRequest req{v, r, s, limits};
    urd::Decomposition d = urd::build_urd(req);

    // Self-check before emitting: the bytes must round-trip and verify.
    std::string text = urd::serialize_decomposition(d);
    urd::Decomposition back = urd::parse_decomposition(text);
    urd::Report rep = urd::verify_request(back, v, r, s);
    if (!rep.accepted()) {
        throw urd::InternalError("emitted file would not verify: " +
                                 rep.violations.front().render());
    }
    write_output(out_path, text);
    return kExitAccept;
}

int run_verify(const std::string& in_path, std::optional<int> ev, std::optional<int> er,
               std::optional<int> es) {
    urd::Decomposition d = urd::parse_decomposition(read_input(in_path));
    urd::Report rep = (ev && er && es) ? urd::verify_request(d, *ev, *er, *es) : urd::verify(d);
    if (rep.accepted()) {
        std::cout << "ACCEPT\n";
        return kExitAccept;
    }
    for (const urd::Violation& viol : rep.violations) {
        std::cout << viol.render() << "\n";
    }
    return kExitReject;
}

int run_transform(const std::string& in_path, int i, int j, const std::string& out_path) {
    urd::Decomposition d = urd::parse_decomposition(read_input(in_path));

    urd::Report rep = urd::verify(d);
    if (!rep.accepted()) {
        for (const urd::Violation& viol : rep.violations) {
            std::cerr << viol.render() << "\n";
        }
        return kExitReject;
    }

    const int n = static_cast<int>(d.classes.size());
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
        std::cerr << "class indices must be distinct and in [0," << n << ")\n";
        return kExitInfeasible;
    }

    std::array<urd::ParallelClass, 3> paths;
    try {
        paths = urd::transform_pair(d.classes[i], d.classes[j]);
    } catch (const urd::StructureError& e) {  // KindMismatch / NotEdgeDisjoint
        std::cerr << e.what() << "\n";
        return kExitInfeasible;
    }

    urd::Decomposition nd;
    nd.v = d.v;
    nd.graph_kind = d.graph_kind;
    nd.factor = d.factor;
    for (int k = 0; k < n; k++) {
        if (k == j) continue;
        if (k == i) {
            for (urd::ParallelClass& pc : paths) nd.classes.push_back(std::move(pc));
        } else {
            nd.classes.push_back(d.classes[k]);
        }
    }

    std::string text = urd::serialize_decomposition(nd);
    urd::Decomposition back = urd::parse_decomposition(text);
    urd::Report out_rep = urd::verify(back);
    if (!out_rep.accepted()) {
        throw urd::InternalError("transformed file would not verify: " +
                                 out_rep.violations.front().render());
    }
    write_output(out_path, text);
    return kExitAccept;
}

int run_oracle(int v, bool long_run, std::optional<double> time_limit_override) {
    const bool tiny = v == 3 || v == 6 || v == 9;
    if (!tiny && !(v == 12 && long_run)) {
        std::cerr << "oracle spectrum supports v in {3,6,9}; v=12 needs --long-run\n";
        return kExitInfeasible;
    }
    urd::SearchLimits budget;
    if (time_limit_override) {
        budget.time_limit_secs =
            *time_limit_override > 0 ? std::optional<double>(*time_limit_override) : std::nullopt;
    } else if (long_run) {
        budget.time_limit_secs = std::nullopt;  // explicit long runs default to unlimited
    }
    urd::OracleResult res = urd::oracle_spectrum(v, budget);
    std::string out;
    for (const urd::SpectrumPoint& p : res.points) {
        out += std::to_string(p.r) + " " + std::to_string(p.s) + "\n";
    }
    out += res.exhausted ? "exhausted: yes\n" : "exhausted: no\n";
    std::cout << out;
    return res.exhausted ? kExitAccept : kExitTimeout;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniformly resolvable {P3,K3} decompositions of K_v"};
    app.require_subcommand(1);

    int v = 0, r = 0, s = 0, idx_i = 0, idx_j = 0;
    uint64_t seed = 0;
    int max_restarts = 500;
    int max_class_attempts = 200;
    double time_limit_secs = 60.0;
    bool time_limit_given = false;
    std::string in_path = "-";
    std::string out_path = "-";
    std::optional<int> expect_v, expect_r, expect_s;
    bool long_run = false;

    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "print the admissible (r,s) pairs for one v");
    spectrum_cmd->add_option("v", v, "number of vertices (multiple of 3)")->required();

    CLI::App* build_cmd =
        app.add_subcommand("build", "construct a decomposition with r path and s triangle classes");
    build_cmd->add_option("v", v, "number of vertices (multiple of 3)")->required();
    build_cmd->add_option("r", r, "path parallel classes")->required();
    build_cmd->add_option("s", s, "triangle parallel classes")->required();
    build_cmd->add_option("--seed", seed, "search seed")->capture_default_str();
    build_cmd->add_option("--out", out_path, "output path, - for stdout")->capture_default_str();
    build_cmd->add_option("--max-restarts", max_restarts, "search restarts")
        ->capture_default_str();
    build_cmd
        ->add_option("--max-class-attempts", max_class_attempts,
                     "greedy attempts per parallel class")
        ->capture_default_str();
    build_cmd
        ->add_option("--time-limit-secs", time_limit_secs, "search time limit, 0 for unlimited")
        ->capture_default_str();

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check a decomposition file, print ACCEPT or violations");
    verify_cmd->add_option("file", in_path, "input path, - for stdin")->required();
    CLI::Option* opt_ev = verify_cmd->add_option("--expect-v", expect_v, "expected v");
    CLI::Option* opt_er = verify_cmd->add_option("--expect-r", expect_r, "expected path classes");
    CLI::Option* opt_es =
        verify_cmd->add_option("--expect-s", expect_s, "expected triangle classes");
    opt_ev->needs(opt_er)->needs(opt_es);
    opt_er->needs(opt_ev)->needs(opt_es);
    opt_es->needs(opt_ev)->needs(opt_er);

    CLI::App* transform_cmd = app.add_subcommand(
        "transform", "replace two triangle classes by three path classes (exchange lemma)");
    transform_cmd->add_option("file", in_path, "input path, - for stdin")->required();
    transform_cmd->add_option("i", idx_i, "first triangle class index (0-based)")->required();
    transform_cmd->add_option("j", idx_j, "second triangle class index (0-based)")->required();
    transform_cmd->add_option("--out", out_path, "output path, - for stdout")
        ->capture_default_str();

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "independent exhaustive re-derivations");
    oracle_cmd->require_subcommand(1);
    CLI::App* oracle_spectrum_cmd = oracle_cmd->add_subcommand(
        "spectrum", "exhaustively decide every counting-admissible (r,s) for tiny v");
    oracle_spectrum_cmd->add_option("v", v, "number of vertices: 3, 6, 9, or 12 with --long-run")
        ->required();
    oracle_spectrum_cmd->add_flag("--long-run", long_run,
                                  "allow v=12 (can run for a very long time)");
    oracle_spectrum_cmd
        ->add_option("--time-limit-secs", time_limit_secs,
                     "budget, 0 for unlimited (default: 60, unlimited with --long-run)")
        ->each([&](const std::string&) { time_limit_given = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (spectrum_cmd->parsed()) return run_spectrum(v);
        if (build_cmd->parsed()) {
            return run_build(v, r, s, make_limits(seed, max_restarts, max_class_attempts,
                                                  time_limit_secs),
                             out_path);
        }
        if (verify_cmd->parsed()) return run_verify(in_path, expect_v, expect_r, expect_s);
        if (transform_cmd->parsed()) return run_transform(in_path, idx_i, idx_j, out_path);
        if (oracle_spectrum_cmd->parsed()) {
            return run_oracle(v, long_run,
                              time_limit_given ? std::optional<double>(time_limit_secs)
                                               : std::nullopt);
        }
        std::cerr << "no command\n";
        return kExitUsage;
    } catch (const urd::ParseError& e) {
        std::cerr << e.what() << "\n";  // already carries "parse error at line:col"
        return kExitIo;
    } catch (const urd::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const urd::StructureError& e) {
        std::cerr << e.what() << "\n";
        return kExitIo;
    } catch (const urd::InfeasibleError& e) {
        std::cerr << e.what() << "\n";
        return kExitInfeasible;
    } catch (const urd::TimeoutError& e) {
        std::cerr << e.what() << "\n";
        return kExitTimeout;
    } catch (const IoError& e) {
        std::cerr << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
