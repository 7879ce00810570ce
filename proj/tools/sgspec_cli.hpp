#pragma once

// Command logic for the sgspec binary, kept in a header so tests can drive
// run_cli with string streams.
//
// Exit codes: 0 ok / holds, 2 usage or parse error, 3 hypothesis not met,
// 4 inequality violated, 5 surgery precondition failed.

#include <sgspec/eigen.hpp>
#include <sgspec/graph_ops.hpp>
#include <sgspec/matrices.hpp>
#include <sgspec/sg_format.hpp>
#include <sgspec/verify/campaign.hpp>
#include <sgspec/verify/checkers.hpp>
#include <sgspec/verify/report_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sgspec::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kHypothesis = 3, kViolation = 4, kSurgery = 5 };

namespace detail {

using verify::TheoremId;

[[noreturn]] inline void arg_mismatch(const std::string& why) { throw Error(ErrorKind::ArgMismatch, why); }

inline MatrixKind parse_matrix_kind(const std::string& s) {
    if (s == "laplacian") return MatrixKind::laplacian;
    if (s == "net") return MatrixKind::net;
    if (s == "normalized") return MatrixKind::normalized;
    if (s == "adjacency") return MatrixKind::adjacency;
    arg_mismatch("unknown matrix '" + s + "'");
}

inline std::vector<Sign> parse_sign_string(const std::string& s) {
    std::vector<Sign> out;
    for (char c : s) {
        if (c == '+') out.push_back(Sign::plus);
        else if (c == '-') out.push_back(Sign::minus);
        else arg_mismatch(std::string("sign string may only contain + and -, got '") + c + "'");
    }
    return out;
}

inline Sign parse_one_sign(const std::string& s) {
    const auto v = parse_sign_string(s);
    if (v.size() != 1) arg_mismatch("expected a single sign, got '" + s + "'");
    return v.front();
}

inline std::vector<TheoremId> parse_theorem_list(const std::string& s) {
    if (s.empty() || s == "all") return {verify::kAllTheorems.begin(), verify::kAllTheorems.end()};
    std::vector<TheoremId> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const auto item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!item.empty()) out.push_back(verify::theorem_from_string(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

enum class Arity { none, vertex, edge, pair, generated };

inline Arity arity(TheoremId id) {
    switch (id) {
    case TheoremId::T2_1:
    case TheoremId::C2_2:
    case TheoremId::T2_7:
    case TheoremId::T3_4:
    case TheoremId::C3_5:
    case TheoremId::C3_6:
    case TheoremId::C3_7: return Arity::vertex;
    case TheoremId::L2_3:
    case TheoremId::T3_2:
    case TheoremId::T3_3:
    case TheoremId::T4_1:
    case TheoremId::T4_2: return Arity::edge;
    case TheoremId::T4_3: return Arity::pair;
    case TheoremId::T2_4:
    case TheoremId::C2_5:
    case TheoremId::C2_8:
    case TheoremId::C2_9: return Arity::generated;
    case TheoremId::L3_1:
    case TheoremId::B4: return Arity::none;
    }
    return Arity::none;
}

struct CheckArgs {
    std::string file;
    std::string theorem;
    std::optional<int> vertex;
    std::vector<int> edge;
    std::vector<int> pair;
    std::optional<int> m;
    std::string signs;
    std::string sign_last;
    std::optional<std::uint64_t> seed;
    double tol = verify::kDefaultTol;
};

inline verify::InterlacingReport run_check(const CheckArgs& a) {
    const TheoremId id = verify::theorem_from_string(a.theorem);
    const Arity ar = arity(id);
    const bool generated = ar == Arity::generated;
    if (generated != a.file.empty())
        arg_mismatch(generated ? std::string(to_string(id)) + " builds its own graphs; no file expected"
                               : std::string(to_string(id)) + " needs a graph file");
    auto expect = [&](bool present, bool wanted, const char* what) {
        if (present && !wanted) arg_mismatch(std::string(to_string(id)) + " takes no " + what);
        if (!present && wanted) arg_mismatch(std::string(to_string(id)) + " needs " + what);
    };
    expect(a.vertex.has_value(), ar == Arity::vertex, "--vertex");
    expect(!a.edge.empty(), ar == Arity::edge, "--edge");
    expect(!a.pair.empty(), ar == Arity::pair, "--pair");
    expect(a.m.has_value(), generated, "--m");
    expect(!a.signs.empty() || !a.sign_last.empty(), id == TheoremId::T2_4, "--signs and --sign-last");
    expect(a.seed.has_value(), generated && id != TheoremId::T2_4, "--seed");
    if (id == TheoremId::T2_4 && (a.signs.empty() || a.sign_last.empty()))
        arg_mismatch("T2.4 needs both --signs and --sign-last");

    if (generated) {
        switch (id) {
        case TheoremId::T2_4:
            return verify::check_T2_4(*a.m, parse_sign_string(a.signs), parse_one_sign(a.sign_last), a.tol);
        case TheoremId::C2_5: return verify::check_C2_5(*a.m, *a.seed, a.tol);
        case TheoremId::C2_8: return verify::check_C2_8_C2_9(verify::TreeKind::path, *a.m, *a.seed, a.tol);
        default: return verify::check_C2_8_C2_9(verify::TreeKind::star, *a.m, *a.seed, a.tol);
        }
    }
    const auto g = read_sg_file(a.file);
    switch (id) {
    case TheoremId::T2_1: return verify::check_T2_1(g, *a.vertex, a.tol);
    case TheoremId::C2_2: return verify::check_C2_2(g, *a.vertex, a.tol);
    case TheoremId::T2_7: return verify::check_T2_7(g, *a.vertex, a.tol);
    case TheoremId::T3_4: return verify::check_T3_4(g, *a.vertex, a.tol);
    case TheoremId::C3_5: return verify::check_C3_5(g, *a.vertex, a.tol);
    case TheoremId::C3_6: return verify::check_C3_6(g, *a.vertex, a.tol);
    case TheoremId::C3_7: return verify::check_C3_7(g, *a.vertex, a.tol);
    case TheoremId::L2_3: return verify::check_L2_3(g, a.edge[0], a.edge[1], a.tol);
    case TheoremId::T3_2: return verify::check_T3_2(g, a.edge[0], a.edge[1], a.tol);
    case TheoremId::T3_3: return verify::check_T3_3(g, a.edge[0], a.edge[1], a.tol);
    case TheoremId::T4_1: return verify::check_T4_1(g, a.edge[0], a.edge[1], a.tol);
    case TheoremId::T4_2: return verify::check_T4_2(g, a.edge[0], a.edge[1], a.tol);
    case TheoremId::T4_3: return verify::check_T4_3(g, a.pair[0], a.pair[1], a.tol);
    case TheoremId::L3_1: return verify::check_L3_1(g, a.tol);
    default: return verify::check_B4(g, a.tol);
    }
}

inline int report_exit(const verify::InterlacingReport& r) {
    if (!r.hypothesis_met) return kHypothesis;
    return r.holds ? kOk : kViolation;
}

inline bool surgery_error(ErrorKind k) {
    switch (k) {
    case ErrorKind::NotAllowable:
    case ErrorKind::NoSuchEdge:
    case ErrorKind::DuplicateEdge:
    case ErrorKind::SelfLoop:
    case ErrorKind::VertexOutOfRange:
    case ErrorKind::SameVertex:
    case ErrorKind::LengthMismatch:
    case ErrorKind::EmptyGraph: return true;
    default: return false;
    }
}

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::ArgMismatch, "cannot write " + path);
    f << text;
}

inline std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

inline void print_info(std::ostream& out, const SignedGraph& g) {
    const auto prof = degree_profile(g);
    const bool balanced = is_balanced(g);
    const bool connected = is_connected(g);
    const auto co = co_regularity(g);
    out << "order " << g.order() << '\n' << "size " << g.size() << '\n';
    out << "degrees " << join_ints(prof.d) << '\n';
    out << "positive_degrees " << join_ints(prof.d_plus) << '\n';
    out << "negative_degrees " << join_ints(prof.d_minus) << '\n';
    verify::Json j;
    j["order"] = g.order();
    j["size"] = g.size();
    j["degrees"] = prof.d;
    j["positive_degrees"] = prof.d_plus;
    j["negative_degrees"] = prof.d_minus;
    if (g.order() > 0) {
        const auto range = min_max_neg_degree(g);
        out << "delta_minus " << range.min << '\n' << "Delta_minus " << range.max << '\n';
        j["delta_minus"] = range.min;
        j["Delta_minus"] = range.max;
    } else {
        j["delta_minus"] = nullptr;
        j["Delta_minus"] = nullptr;
    }
    out << "balanced " << (balanced ? "true" : "false") << '\n';
    out << "connected " << (connected ? "true" : "false") << '\n';
    out << "components " << component_count(g) << '\n';
    if (co)
        out << "co_regular (" << co->r << "," << co->s << ")\n";
    else
        out << "co_regular none\n";
    out << "complete_coregular " << (co && co->complete ? "true" : "false") << '\n';
    j["balanced"] = balanced;
    j["connected"] = connected;
    j["components"] = component_count(g);
    j["co_regular"] = co ? verify::Json{{"r", co->r}, {"s", co->s}} : verify::Json(nullptr);
    j["complete_coregular"] = co && co->complete;
    out << "---\n" << j.dump() << '\n';
}

} // namespace detail

/// Runs one invocation. argv[0] is the program name.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Signed-graph spectra and interlacing checks", "sgspec"};
    app.require_subcommand(1);

    // spectrum
    std::string spec_file, spec_matrix = "laplacian";
    bool dump = false;
    auto* spectrum = app.add_subcommand("spectrum", "Print the ordered spectrum of a graph matrix");
    spectrum->add_option("file", spec_file, ".sg graph file")->required();
    spectrum->add_option("--matrix", spec_matrix, "laplacian | net | normalized | adjacency")
        ->capture_default_str();
    spectrum->add_flag("--dump-matrix", dump, "Also print the matrix");

    // check
    detail::CheckArgs ca;
    auto* check = app.add_subcommand("check", "Check one interlacing inequality");
    check->add_option("file", ca.file, ".sg graph file (omit for T2.4, C2.5, C2.8, C2.9)");
    check->add_option("--theorem", ca.theorem, "Theorem id, e.g. T2.1")->required();
    check->add_option("--vertex", ca.vertex, "Vertex for deletion checks");
    check->add_option("--edge", ca.edge, "Edge endpoints u v")->expected(2);
    check->add_option("--pair", ca.pair, "Vertices a b to contract")->expected(2);
    check->add_option("--m", ca.m, "Cycle, path or star parameter m");
    check->add_option("--signs", ca.signs, "Signs of C_{m+1} in cycle order, e.g. +-++");
    check->add_option("--sign-last", ca.sign_last, "Sign of the closing edge of C_m");
    check->add_option("--seed", ca.seed, "Seed for generated signatures");
    check->add_option("--tol", ca.tol, "Relative tolerance")->capture_default_str();

    // campaign
    verify::CampaignConfig cfg;
    std::string theorems = "all", out_path, format = "json";
    auto* campaign = app.add_subcommand("campaign", "Run a seeded random campaign");
    campaign->add_option("--theorems", theorems, "Comma-separated ids or 'all'")->capture_default_str();
    campaign->add_option("--n-min", cfg.n_min)->capture_default_str();
    campaign->add_option("--n-max", cfg.n_max)->capture_default_str();
    campaign->add_option("--p", cfg.p, "Edge probability")->capture_default_str();
    campaign->add_option("--q", cfg.q, "Negative-edge probability")->capture_default_str();
    campaign->add_option("--samples", cfg.samples, "Samples per theorem")->capture_default_str();
    campaign->add_option("--seed", cfg.seed)->capture_default_str();
    campaign->add_option("--tol", cfg.tol, "Relative tolerance")->capture_default_str();
    campaign->add_option("--out", out_path, "Report file");
    campaign->add_option("--format", format, "json | csv")->capture_default_str();

    // surgery
    std::string surg_file, op, alpha, sign = "+", surg_out;
    std::optional<int> surg_vertex;
    std::vector<int> surg_edge, surg_pair;
    auto* surgery = app.add_subcommand("surgery", "Apply a graph operation and write the result");
    surgery->add_option("file", surg_file, ".sg graph file")->required();
    surgery->add_option("op", op, "delete-vertex | delete-edge | add-edge | contract | switch")->required();
    surgery->add_option("--vertex", surg_vertex);
    surgery->add_option("--edge", surg_edge, "Edge endpoints u v")->expected(2);
    surgery->add_option("--pair", surg_pair, "Vertices a b to contract")->expected(2);
    surgery->add_option("--sign", sign, "Sign of an added edge")->capture_default_str();
    surgery->add_option("--alpha", alpha, "Switching function, one sign per vertex");
    surgery->add_option("--out", surg_out, "Output file (default stdout)");

    // info
    std::string info_file;
    auto* info = app.add_subcommand("info", "Degrees, balance, co-regularity and connectivity");
    info->add_option("file", info_file, ".sg graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*spectrum) {
            const auto g = read_sg_file(spec_file);
            const auto m = build_matrix(g, detail::parse_matrix_kind(spec_matrix));
            const auto s = eigenvalues(m);
            for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << format_g17(s[i]);
            out << '\n';
            if (dump) dump_matrix(out, m);
            return kOk;
        }
        if (*check) {
            const auto r = detail::run_check(ca);
            out << verify::to_json(r).dump(2) << '\n';
            return detail::report_exit(r);
        }
        if (*campaign) {
            cfg.theorems = detail::parse_theorem_list(theorems);
            if (format != "json" && format != "csv") detail::arg_mismatch("format must be json or csv");
            const auto res = verify::run_campaign(cfg);
            if (!out_path.empty())
                detail::write_text(out_path, format == "json" ? verify::to_json(res).dump(2) + "\n"
                                                              : verify::to_csv(res.reports));
            out << verify::summary_json(res).dump(2) << '\n';
            return res.total_fails() > 0 ? kViolation : kOk;
        }
        if (*surgery) {
            const auto g = read_sg_file(surg_file);
            auto need = [&](bool ok, const char* what) {
                if (!ok) detail::arg_mismatch(op + " needs " + what);
            };
            std::optional<SignedGraph> result;
            try {
                if (op == "delete-vertex") {
                    need(surg_vertex.has_value(), "--vertex");
                    result = delete_vertex(g, *surg_vertex).graph;
                } else if (op == "delete-edge") {
                    need(!surg_edge.empty(), "--edge");
                    result = delete_edge(g, surg_edge[0], surg_edge[1]).graph;
                } else if (op == "add-edge") {
                    need(!surg_edge.empty(), "--edge");
                    result = add_edge(g, surg_edge[0], surg_edge[1], detail::parse_one_sign(sign));
                } else if (op == "contract") {
                    need(!surg_pair.empty(), "--pair");
                    result = contract(g, surg_pair[0], surg_pair[1]).graph;
                } else if (op == "switch") {
                    need(!alpha.empty(), "--alpha");
                    result = apply_switching(g, SwitchingFunction{detail::parse_sign_string(alpha)});
                } else {
                    detail::arg_mismatch("unknown surgery '" + op + "'");
                }
            } catch (const Error& e) {
                if (!detail::surgery_error(e.kind())) throw;
                err << "error: " << e.what() << '\n';
                return kSurgery;
            }
            if (surg_out.empty()) out << to_sg(*result);
            else write_sg_file(surg_out, *result);
            return kOk;
        }
        if (*info) {
            detail::print_info(out, read_sg_file(info_file));
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace sgspec::cli
