#pragma once

// One checker per interlacing inequality. Each returns an InterlacingReport;
// a checker called outside its hypothesis sets hypothesis_met = false and
// evaluates nothing. Positions in reports are 1-based.

#include <sgspec/eigen.hpp>
#include <sgspec/generators.hpp>
#include <sgspec/graph_ops.hpp>
#include <sgspec/matrices.hpp>
#include <sgspec/rng.hpp>
#include <sgspec/sg_format.hpp>
#include <sgspec/signed_graph.hpp>
#include <sgspec/verify/report.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace sgspec::verify {

constexpr double kDefaultTol = 1e-9;

enum class TreeKind { path, star };

namespace detail {

inline OrderedSpectrum spec_L(const SignedGraph& g) { return eigenvalues(laplacian_exact(g)); }
inline OrderedSpectrum spec_N(const SignedGraph& g) { return eigenvalues(net_laplacian_exact(g)); }
inline OrderedSpectrum spec_Nbar(const SignedGraph& g) { return eigenvalues(normalized_net_laplacian(g)); }

inline InterlacingReport start(TheoremId id, const SignedGraph& g, std::string surgery) {
    InterlacingReport r;
    r.theorem = id;
    r.graph = to_edge_list_string(g);
    r.surgery = std::move(surgery);
    return r;
}

inline std::string vertex_arg(Vertex v) { return "v=" + std::to_string(v); }
inline std::string edge_arg(Vertex u, Vertex v) { return "e=" + std::to_string(u) + "-" + std::to_string(v); }

inline InterlacingReport gate_failed(InterlacingReport r, std::string why) {
    r.hypothesis_met = false;
    r.holds = true;
    r.note = std::move(why);
    return r;
}

inline void record(InterlacingReport& r, const char* name, const OrderedSpectrum& s) {
    r.spectra.push_back({name, s.values});
}

// a(p) with 1-based p.
inline double at(const OrderedSpectrum& s, int p) { return s[static_cast<std::size_t>(p - 1)]; }

inline int order_of(const OrderedSpectrum& s) { return static_cast<int>(s.size()); }

} // namespace detail

// Laplacian, vertex deletion: alpha_p <= beta_p + 1 <= alpha_{p+1} + 1.
inline InterlacingReport check_T2_1(const SignedGraph& g, Vertex v, double tol = kDefaultTol) {
    g.check_vertex(v);
    if (g.order() < 2) throw Error(ErrorKind::BadOrder, "vertex deletion needs n >= 2");
    auto r = detail::start(TheoremId::T2_1, g, detail::vertex_arg(v));
    const auto h = delete_vertex(g, v).graph;
    r.derived_graph = to_edge_list_string(h);
    const auto a = detail::spec_L(g), b = detail::spec_L(h);
    detail::record(r, "alpha", a);
    detail::record(r, "beta", b);
    r.hypothesis_met = true;
    r.tol = scaled_tolerance(tol, {&a, &b});
    LinkLog log(r);
    for (int p = 1; p <= detail::order_of(b); ++p) {
        log.require("alpha_p <= beta_p + 1", p, detail::at(a, p), detail::at(b, p) + 1);
        log.require("beta_p + 1 <= alpha_{p+1} + 1", p, detail::at(b, p) + 1, detail::at(a, p + 1) + 1);
    }
    return r;
}

// Dominating vertex: alpha_p <= beta_p + 1 <= alpha_{p+1}.
inline InterlacingReport check_C2_2(const SignedGraph& g, Vertex v, double tol = kDefaultTol) {
    g.check_vertex(v);
    auto r = detail::start(TheoremId::C2_2, g, detail::vertex_arg(v));
    if (g.order() < 2) return detail::gate_failed(std::move(r), "graph has a single vertex");
    if (g.degree(v) != g.order() - 1)
        return detail::gate_failed(std::move(r), "vertex is not adjacent to all others");
    const auto h = delete_vertex(g, v).graph;
    r.derived_graph = to_edge_list_string(h);
    const auto a = detail::spec_L(g), b = detail::spec_L(h);
    detail::record(r, "alpha", a);
    detail::record(r, "beta", b);
    r.hypothesis_met = true;
    r.tol = scaled_tolerance(tol, {&a, &b});
    LinkLog log(r);
    for (int p = 1; p <= detail::order_of(b); ++p) {
        log.require("alpha_p <= beta_p + 1", p, detail::at(a, p), detail::at(b, p) + 1);
        log.require("beta_p + 1 <= alpha_{p+1}", p, detail::at(b, p) + 1, detail::at(a, p + 1));
    }
    return r;
}

// Laplacian, edge deletion: beta_p <= alpha_p <= beta_p + 2.
inline InterlacingReport check_L2_3(const SignedGraph& g, Vertex u, Vertex v, double tol = kDefaultTol) {
    const auto cut = delete_edge(g, u, v); // NoSuchEdge
    auto r = detail::start(TheoremId::L2_3, g, detail::edge_arg(u, v));
    r.derived_graph = to_edge_list_string(cut.graph);
    const auto a = detail::spec_L(g), b = detail::spec_L(cut.graph);
    detail::record(r, "alpha", a);
    detail::record(r, "beta", b);
    r.hypothesis_met = true;
    r.tol = scaled_tolerance(tol, {&a, &b});
    LinkLog log(r);
    for (int p = 1; p <= detail::order_of(a); ++p) {
        log.require("beta_p <= alpha_p", p, detail::at(b, p), detail::at(a, p));
        log.require("alpha_p <= beta_p + 2", p, detail::at(a, p), detail::at(b, p) + 2);
    }
    return r;
}

namespace detail {

// C_{m+1} on 0..m with the given signs in canonical cycle order, and C_m
// obtained by removing vertex m and joining 0 and m-1 with sign_last.
inline std::pair<SignedGraph, SignedGraph> cycle_pair(int m, std::span<const Sign> sig1, Sign sign_last) {
    const auto big = generate(Family::cycle, m + 1, signature::Explicit{{sig1.begin(), sig1.end()}});
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < m; ++i) edges.push_back({i, i + 1, sig1[static_cast<std::size_t>(i)]});
    edges.push_back({m - 1, 0, sign_last});
    return {big, SignedGraph(m, edges)};
}

inline void cycle_chain(InterlacingReport& r, const OrderedSpectrum& a, const OrderedSpectrum& b, double tol) {
    detail::record(r, "alpha", a);
    detail::record(r, "beta", b);
    r.hypothesis_met = true;
    r.tol = scaled_tolerance(tol, {&a, &b});
    LinkLog log(r);
    for (int p = 1; p <= detail::order_of(b); ++p) {
        log.require("alpha_p - 1 <= beta_p", p, detail::at(a, p) - 1, detail::at(b, p));
        log.require("beta_p <= alpha_{p+1} + 2", p, detail::at(b, p), detail::at(a, p + 1) + 2);
    }
}

inline std::vector<Sign> random_signs(SplitMix64& rng, std::size_t count) {
    std::vector<Sign> s(count);
    for (auto& x : s) x = rng.bernoulli(0.5) ? Sign::minus : Sign::plus;
    return s;
}

} // namespace detail

// C_{m+1} against C_m sharing the path v_1..v_m: alpha_p - 1 <= beta_p <= alpha_{p+1} + 2.
inline InterlacingReport check_T2_4(int m, std::span<const Sign> sig1, Sign sign_last, double tol = kDefaultTol) {
    if (m < 3) throw Error(ErrorKind::BadOrder, "cycle pair needs m >= 3");
    if (sig1.size() != static_cast<std::size_t>(m + 1))
        throw Error(ErrorKind::LengthMismatch, "signature of C_{m+1} needs m+1 signs");
    const auto [big, small] = detail::cycle_pair(m, sig1, sign_last);
    auto r = detail::start(TheoremId::T2_4, big,
                           "m=" + std::to_string(m) + ",sign_last=" + std::string(1, to_char(sign_last)));
    r.derived_graph = to_edge_list_string(small);
    detail::cycle_chain(r, detail::spec_L(big), detail::spec_L(small), tol);
    return r;
}

// Arbitrary independent signatures on C_{m+1} and C_m. C_m is switching
// equivalent to the C_m derived from sigma_1 once the closing edge is chosen
// so both have the same cycle sign, so the cycle chain applies to it; the
// spectra compared are those of the drawn graphs themselves.
inline InterlacingReport check_C2_5(int m, std::uint64_t seed, double tol = kDefaultTol) {
    if (m < 3) throw Error(ErrorKind::BadOrder, "cycle pair needs m >= 3");
    SplitMix64 rng(seed);
    const auto sig1 = detail::random_signs(rng, static_cast<std::size_t>(m + 1));
    const auto sig2 = detail::random_signs(rng, static_cast<std::size_t>(m));
    const auto big = generate(Family::cycle, m + 1, signature::Explicit{sig1});
    const auto small = generate(Family::cycle, m, signature::Explicit{sig2});
    Sign closing = is_balanced(small) ? Sign::plus : Sign::minus;
    for (int i = 0; i + 1 < m; ++i) closing = closing * sig1[static_cast<std::size_t>(i)];
    const auto canonical = detail::cycle_pair(m, sig1, closing).second;

    auto r = detail::start(TheoremId::C2_5, big,
                           "m=" + std::to_string(m) + ",seed=" + std::to_string(seed));
    r.derived_graph = to_edge_list_string(small);
    r.flags.push_back(std::string("closing_sign=") + to_char(closing));
    if (!switching_equivalent(small, canonical))
        throw Error(ErrorKind::UnderlyingGraphMismatch, "cycle reduction lost switching equivalence");
    detail::cycle_chain(r, detail::spec_L(big), detail::spec_L(small), tol);
    return r;
}

// Pendant vertex deletion: alpha_p <= beta_p <= alpha_{p+1}.
inline InterlacingReport check_T2_7(const SignedGraph& g, Vertex u, double tol = kDefaultTol) {
    g.check_vertex(u);
    auto r = detail::start(TheoremId::T2_7, g, detail::vertex_arg(u));
    if (g.degree(u) != 1) return detail::gate_failed(std::move(r), "vertex is not pendant");
    const auto h = delete_vertex(g, u).graph;
    r.derived_graph = to_edge_list_string(h);
    const auto a = detail::spec_L(g), b = detail::spec_L(h);
    detail::record(r, "alpha", a);
    detail::record(r, "beta", b);
    r.hypothesis_met = true;
    r.tol = scaled_tolerance(tol, {&a, &b});
    r.flags.push_back(std::string("pendant_sign=") + to_char(g.neighbours(u).front().second));
    LinkLog log(r);
    for (int p = 1; p <= detail::order_of(b); ++p) {
        log.require("alpha_p <= beta_p", p, detail::at(a, p), detail::at(b, p));
        log.require("beta_p <= alpha_{p+1}", p, detail::at(b, p), detail::at(a, p + 1));
    }
    return r;
}

// Random signed paths P_{m+1}, P_m or stars K_{1,m}, K_{1,m-1}:
// alpha_p <= beta_p <= alpha_{p+1}. Trees are balanced, so both graphs are
// switched to all-positive; the smaller one is then the larger minus a leaf.
inline InterlacingReport check_C2_8_C2_9(TreeKind kind, int m, std::uint64_t seed, double tol = kDefaultTol) {
    if (m < 2) throw Error(ErrorKind::BadOrder, "tree pair needs m >= 2");
    const Family fam = kind == TreeKind::path ? Family::path : Family::star;
    const TheoremId id = kind == TreeKind::path ? TheoremId::C2_8 : TheoremId::C2_9;
    // K_{1,m} has m+1 vertices.
    const int big_n = m + 1, small_n = m;
    SplitMix64 rng(seed);
    const auto big = generate(fam, big_n, signature::Explicit{detail::random_signs(rng, static_cast<std::size_t>(big_n - 1))});
    const auto small = generate(fam, small_n, signature::Explicit{detail::random_signs(rng, static_cast<std::size_t>(small_n - 1))});

    auto r = detail::start(id, big, std::string("kind=") + (kind == TreeKind::path ? "path" : "star") +
                                        ",m=" + std::to_string(m) + ",seed=" + std::to_string(seed));
    r.derived_graph = to_edge_list_string(small);
    const auto big_pos = apply_switching(big, *balancing_switch(big));
    const auto small_pos = apply_switching(small, *balancing_switch(small));
    // The last vertex is a leaf in both families; removing it gives the smaller tree.
    if (!(delete_vertex(big_pos, big_n - 1).graph == small_pos) ||
        !(big_pos == with_uniform_sign(big, Sign::plus)))
        throw Error(ErrorKind::UnderlyingGraphMismatch, "tree reduction failed");

    const auto a = detail::spec_L(big), b = detail::spec_L(small);
    detail::record(r, "alpha", a);
    detail::record(r, "beta", b);
    r.hypothesis_met = true;
    r.tol = scaled_tolerance(tol, {&a, &b});
    LinkLog log(r);
    for (int p = 1; p <= detail::order_of(b); ++p) {
        log.require("alpha_p <= beta_p", p, detail::at(a, p), detail::at(b, p));
        log.require("beta_p <= alpha_{p+1}", p, detail::at(b, p), detail::at(a, p + 1));
    }
    return r;
}

// L against N on one graph: beta_p + 2 delta^- <= alpha_p <= beta_p + 2 Delta^-.
inline InterlacingReport check_L3_1(const SignedGraph& g, double tol = kDefaultTol) {
    const auto range = min_max_neg_degree(g); // EmptyGraph
    auto r = detail::start(TheoremId::L3_1, g, "");
    const auto a = detail::spec_L(g), b = detail::spec_N(g);
    detail::record(r, "alpha", a);
    detail::record(r, "beta", b);
    r.hypothesis_met = true;
    r.tol = scaled_tolerance(tol, {&a, &b});
    r.flags.push_back("delta_minus=" + std::to_string(range.min));
    r.flags.push_back("Delta_minus=" + std::to_string(range.max));
    LinkLog log(r);
    for (int p = 1; p <= detail::order_of(a); ++p) {
        log.require("beta_p + 2 delta^- <= alpha_p", p, detail::at(b, p) + 2.0 * range.min, detail::at(a, p));
        log.require("alpha_p <= beta_p + 2 Delta^-", p, detail::at(a, p), detail::at(b, p) + 2.0 * range.max);
    }
    return r;
}

namespace detail {

struct EdgeCase {
    InterlacingReport report;
    std::optional<EdgeDeletion> cut;
};

inline EdgeCase edge_case(TheoremId id, const SignedGraph& g, Vertex u, Vertex v, Sign needed) {
    EdgeCase c{start(id, g, edge_arg(u, v)), std::nullopt};
    g.check_vertex(u);
    g.check_vertex(v);
    const auto s = g.sign_of(u, v);
    if (!s) {
        c.report = gate_failed(std::move(c.report), "no such edge");
        return c;
    }
    if (*s != needed) {
        c.report = gate_failed(std::move(c.report),
                               needed == Sign::minus ? "edge is positive" : "edge is negative");
        return c;
    }
    c.cut = delete_edge(g, u, v);
    c.report.derived_graph = to_edge_list_string(c.cut->graph);
    return c;
}

} // namespace detail

// Net-Laplacian, negative edge deletion: alpha_p <= beta_p <= alpha_{p+1}, alpha_{m+1} = m.
inline InterlacingReport check_T3_2(const SignedGraph& g, Vertex u, Vertex v, double tol = kDefaultTol) {
    auto c = detail::edge_case(TheoremId::T3_2, g, u, v, Sign::minus);
    if (!c.cut) return std::move(c.report);
    auto& r = c.report;
    const auto a = detail::spec_N(g), b = detail::spec_N(c.cut->graph);
    detail::record(r, "alpha", a);
    detail::record(r, "beta", b);
    r.hypothesis_met = true;
    r.tol = scaled_tolerance(tol, {&a, &b});
    const int m = detail::order_of(a);
    LinkLog log(r);
    for (int p = 1; p <= m; ++p) {
        const double next = p < m ? detail::at(a, p + 1) : static_cast<double>(m);
        log.require("alpha_p <= beta_p", p, detail::at(a, p), detail::at(b, p));
        log.require("beta_p <= alpha_{p+1}", p, detail::at(b, p), next);
    }
    return r;
}

// Net-Laplacian, positive edge deletion: alpha_{p-1} <= beta_p <= alpha_p, alpha_0 = -m.
inline InterlacingReport check_T3_3(const SignedGraph& g, Vertex u, Vertex v, double tol = kDefaultTol) {
    auto c = detail::edge_case(TheoremId::T3_3, g, u, v, Sign::plus);
    if (!c.cut) return std::move(c.report);
    auto& r = c.report;
    const auto a = detail::spec_N(g), b = detail::spec_N(c.cut->graph);
    detail::record(r, "alpha", a);
    detail::record(r, "beta", b);
    r.hypothesis_met = true;
    r.tol = scaled_tolerance(tol, {&a, &b});
    const int m = detail::order_of(a);
    LinkLog log(r);
    for (int p = 1; p <= m; ++p) {
        const double prev = p > 1 ? detail::at(a, p - 1) : -static_cast<double>(m);
        log.require("alpha_{p-1} <= beta_p", p, prev, detail::at(b, p));
        log.require("beta_p <= alpha_p", p, detail::at(b, p), detail::at(a, p));
    }
    return r;
}

// Net-Laplacian, vertex deletion in a connected graph: alpha_p - 1 <= beta_p <= alpha_{p+1} + 1.
inline InterlacingReport check_T3_4(const SignedGraph& g, Vertex v, double tol = kDefaultTol) {
    g.check_vertex(v);
    auto r = detail::start(TheoremId::T3_4, g, detail::vertex_arg(v));
    if (g.order() < 2) return detail::gate_failed(std::move(r), "graph has a single vertex");
    if (!is_connected(g)) return detail::gate_failed(std::move(r), "graph is not connected");
    const auto h = delete_vertex(g, v).graph;
    r.derived_graph = to_edge_list_string(h);
    const auto a = detail::spec_N(g), b = detail::spec_N(h);
    detail::record(r, "alpha", a);
    detail::record(r, "beta", b);
    r.hypothesis_met = true;
    r.tol = scaled_tolerance(tol, {&a, &b});
    LinkLog log(r);
    for (int p = 1; p <= detail::order_of(b); ++p) {
        log.require("alpha_p - 1 <= beta_p", p, detail::at(a, p) - 1, detail::at(b, p));
        log.require("beta_p <= alpha_{p+1} + 1", p, detail::at(b, p), detail::at(a, p + 1) + 1);
    }
    return r;
}

namespace detail {

inline InterlacingReport vertex_sign_branch(TheoremId id, const SignedGraph& g, Vertex v, double tol) {
    auto r = start(id, g, vertex_arg(v));
    const auto h = delete_vertex(g, v).graph;
    r.derived_graph = to_edge_list_string(h);
    const auto a = spec_N(g), b = spec_N(h);
    record(r, "alpha", a);
    record(r, "beta", b);
    r.hypothesis_met = true;
    r.tol = scaled_tolerance(tol, {&a, &b});
    LinkLog log(r);
    for (int p = 1; p <= order_of(b); ++p) {
        if (id == TheoremId::C3_5) {
            log.require("alpha_p - 1 <= beta_p", p, at(a, p) - 1, at(b, p));
            log.require("beta_p <= alpha_{p+1}", p, at(b, p), at(a, p + 1));
        } else {
            log.require("alpha_p <= beta_p", p, at(a, p), at(b, p));
            log.require("beta_p <= alpha_{p+1} + 1", p, at(b, p), at(a, p + 1) + 1);
        }
    }
    return r;
}

inline std::pair<int, int> signed_degrees(const SignedGraph& g, Vertex v) {
    int plus = 0, minus = 0;
    for (const auto& [w, s] : g.neighbours(v)) (s == Sign::plus ? plus : minus)++;
    return {plus, minus};
}

} // namespace detail

/// Vertex with no negative edge: alpha_p - 1 <= beta_p <= alpha_{p+1}.
inline InterlacingReport check_C3_5(const SignedGraph& g, Vertex v, double tol = kDefaultTol) {
    g.check_vertex(v);
    if (g.order() < 2)
        return detail::gate_failed(detail::start(TheoremId::C3_5, g, detail::vertex_arg(v)), "graph has a single vertex");
    if (detail::signed_degrees(g, v).second != 0)
        return detail::gate_failed(detail::start(TheoremId::C3_5, g, detail::vertex_arg(v)), "vertex has a negative edge");
    return detail::vertex_sign_branch(TheoremId::C3_5, g, v, tol);
}

/// Vertex with no positive edge: alpha_p <= beta_p <= alpha_{p+1} + 1.
inline InterlacingReport check_C3_6(const SignedGraph& g, Vertex v, double tol = kDefaultTol) {
    g.check_vertex(v);
    if (g.order() < 2)
        return detail::gate_failed(detail::start(TheoremId::C3_6, g, detail::vertex_arg(v)), "graph has a single vertex");
    if (detail::signed_degrees(g, v).first != 0)
        return detail::gate_failed(detail::start(TheoremId::C3_6, g, detail::vertex_arg(v)), "vertex has a positive edge");
    return detail::vertex_sign_branch(TheoremId::C3_6, g, v, tol);
}

/// Picks the branch that applies at v; an isolated vertex takes the d^- = 0 branch.
/// A vertex with both signs gets a C3.5 report with hypothesis_met = false.
inline InterlacingReport check_C3_5_C3_6(const SignedGraph& g, Vertex v, double tol = kDefaultTol) {
    g.check_vertex(v);
    const auto [plus, minus] = detail::signed_degrees(g, v);
    if (minus == 0) return check_C3_5(g, v, tol);
    if (plus == 0) return check_C3_6(g, v, tol);
    return detail::gate_failed(detail::start(TheoremId::C3_5, g, detail::vertex_arg(v)),
                               "vertex has edges of both signs");
}

// Complete graph with uniform negative degree s:
// beta_p + 2s <= alpha_p <= mu_p + 1 - 2s <= alpha_{p+1} <= beta_{p+1} + 2s,
// alpha, beta net-Laplacian of g and g - v, mu the Laplacian of g - v.
inline InterlacingReport check_C3_7(const SignedGraph& g, Vertex v, double tol = kDefaultTol) {
    g.check_vertex(v);
    auto r = detail::start(TheoremId::C3_7, g, detail::vertex_arg(v));
    if (g.order() < 2) return detail::gate_failed(std::move(r), "graph has a single vertex");
    const auto co = co_regularity(g);
    if (!co || !co->complete) return detail::gate_failed(std::move(r), "graph is not complete co-regular");
    const auto range = min_max_neg_degree(g);
    if (range.min != range.max) return detail::gate_failed(std::move(r), "negative degree is not uniform");
    const int s = range.min;
    const auto h = delete_vertex(g, v).graph;
    r.derived_graph = to_edge_list_string(h);
    const auto a = detail::spec_N(g), b = detail::spec_N(h), mu = detail::spec_L(h);
    detail::record(r, "alpha", a);
    detail::record(r, "beta", b);
    detail::record(r, "mu", mu);
    r.hypothesis_met = true;
    r.tol = scaled_tolerance(tol, {&a, &b, &mu});
    r.flags.push_back("s=" + std::to_string(s));
    r.flags.push_back("k=" + std::to_string(co->s));
    const double two_s = 2.0 * s;
    const int m = detail::order_of(b);
    LinkLog log(r);
    for (int p = 1; p <= m; ++p) {
        const double mid = detail::at(mu, p) + 1.0 - two_s;
        log.require("beta_p + 2s <= alpha_p", p, detail::at(b, p) + two_s, detail::at(a, p));
        log.require("alpha_p <= mu_p + 1 - 2s", p, detail::at(a, p), mid);
        log.require("mu_p + 1 - 2s <= alpha_{p+1}", p, mid, detail::at(a, p + 1));
        if (p < m)
            log.require("alpha_{p+1} <= beta_{p+1} + 2s", p, detail::at(a, p + 1), detail::at(b, p + 1) + two_s);
        else
            log.skip("alpha_{p+1} <= beta_{p+1} + 2s", p);
    }
    return r;
}

namespace detail {

// Components with at least one edge that are bipartite and carry a single sign.
struct BipartiteSigns {
    bool positive = false;
    bool negative = false;
};

inline BipartiteSigns bipartite_uniform_components(const SignedGraph& g) {
    const auto comp = components(g);
    const int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    std::vector<char> bip(static_cast<std::size_t>(count), 1), has_edge(static_cast<std::size_t>(count), 0),
        all_plus(static_cast<std::size_t>(count), 1), all_minus(static_cast<std::size_t>(count), 1);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (colour[root] != -1) continue;
        colour[root] = 0;
        std::vector<Vertex> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex x = queue[head];
            for (const auto& [y, s] : g.neighbours(x)) {
                if (colour[y] == -1) {
                    colour[y] = 1 - colour[x];
                    queue.push_back(y);
                } else if (colour[y] == colour[x]) {
                    bip[comp[x]] = 0;
                }
            }
        }
    }
    for (const auto& e : g.edges()) {
        const int c = comp[e.u];
        has_edge[c] = 1;
        if (e.sign == Sign::plus) all_minus[c] = 0;
        else all_plus[c] = 0;
    }
    BipartiteSigns out;
    for (int c = 0; c < count; ++c) {
        if (!has_edge[c] || !bip[c]) continue;
        out.positive = out.positive || all_plus[c];
        out.negative = out.negative || all_minus[c];
    }
    return out;
}

} // namespace detail

// Normalized net-Laplacian spectrum inside [-2, 2]. Flags record whether the
// bounds are attained and whether a bipartite single-sign component exists.
inline InterlacingReport check_B4(const SignedGraph& g, double tol = kDefaultTol) {
    if (g.order() < 1) throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
    auto r = detail::start(TheoremId::B4, g, "");
    const auto a = detail::spec_Nbar(g);
    detail::record(r, "alpha", a);
    r.hypothesis_met = true;
    r.tol = scaled_tolerance(tol, {&a});
    LinkLog log(r);
    for (int p = 1; p <= detail::order_of(a); ++p) {
        log.require("-2 <= alpha_p", p, -2.0, detail::at(a, p));
        log.require("alpha_p <= 2", p, detail::at(a, p), 2.0);
    }
    const auto bip = detail::bipartite_uniform_components(g);
    if (std::abs(a.back() - 2.0) <= r.tol) r.flags.push_back("max_attains_2");
    if (std::abs(a.front() + 2.0) <= r.tol) r.flags.push_back("min_attains_-2");
    if (bip.positive) r.flags.push_back("bipartite_positive_component");
    if (bip.negative) r.flags.push_back("bipartite_negative_component");
    return r;
}

namespace detail {

inline std::optional<std::string> isolation_guard(const SignedGraph& before, const SignedGraph& after) {
    if (has_isolated_vertex(before)) return "graph has an isolated vertex";
    if (has_isolated_vertex(after)) return "surgery leaves an isolated vertex";
    return std::nullopt;
}

} // namespace detail

// Normalized, negative edge deletion: alpha_p <= beta_p <= alpha_{p+2}.
// The upper link is skipped where p + 2 > m.
inline InterlacingReport check_T4_1(const SignedGraph& g, Vertex u, Vertex v, double tol = kDefaultTol) {
    auto c = detail::edge_case(TheoremId::T4_1, g, u, v, Sign::minus);
    if (!c.cut) return std::move(c.report);
    auto& r = c.report;
    if (auto why = detail::isolation_guard(g, c.cut->graph)) return detail::gate_failed(std::move(r), *why);
    const auto a = detail::spec_Nbar(g), b = detail::spec_Nbar(c.cut->graph);
    detail::record(r, "alpha", a);
    detail::record(r, "beta", b);
    r.hypothesis_met = true;
    r.tol = scaled_tolerance(tol, {&a, &b});
    const int m = detail::order_of(a);
    LinkLog log(r);
    for (int p = 1; p <= m; ++p) {
        log.require("alpha_p <= beta_p", p, detail::at(a, p), detail::at(b, p));
        if (p + 2 <= m) log.require("beta_p <= alpha_{p+2}", p, detail::at(b, p), detail::at(a, p + 2));
        else log.skip("beta_p <= alpha_{p+2}", p);
    }
    return r;
}

// Normalized, positive edge deletion: alpha_{p-1} <= beta_p <= alpha_{p+1}.
// The lower link at p = 1 and the upper link at p = m are skipped.
inline InterlacingReport check_T4_2(const SignedGraph& g, Vertex u, Vertex v, double tol = kDefaultTol) {
    auto c = detail::edge_case(TheoremId::T4_2, g, u, v, Sign::plus);
    if (!c.cut) return std::move(c.report);
    auto& r = c.report;
    if (auto why = detail::isolation_guard(g, c.cut->graph)) return detail::gate_failed(std::move(r), *why);
    const auto a = detail::spec_Nbar(g), b = detail::spec_Nbar(c.cut->graph);
    detail::record(r, "alpha", a);
    detail::record(r, "beta", b);
    r.hypothesis_met = true;
    r.tol = scaled_tolerance(tol, {&a, &b});
    const int m = detail::order_of(a);
    LinkLog log(r);
    for (int p = 1; p <= m; ++p) {
        if (p > 1) log.require("alpha_{p-1} <= beta_p", p, detail::at(a, p - 1), detail::at(b, p));
        else log.skip("alpha_{p-1} <= beta_p", p);
        if (p < m) log.require("beta_p <= alpha_{p+1}", p, detail::at(b, p), detail::at(a, p + 1));
        else log.skip("beta_p <= alpha_{p+1}", p);
    }
    return r;
}

// Normalized, contraction of {a, b} with disjoint open neighbourhoods:
// alpha_{p-1} <= beta_p <= alpha_{p+1}, alpha_0 = -2.
inline InterlacingReport check_T4_3(const SignedGraph& g, Vertex a, Vertex b, double tol = kDefaultTol) {
    auto r = detail::start(TheoremId::T4_3, g, "a=" + std::to_string(a) + ",b=" + std::to_string(b));
    if (!disjoint_open_neighborhoods(g, a, b)) // SameVertex, VertexOutOfRange
        return detail::gate_failed(std::move(r), "open neighbourhoods intersect");
    const auto merged = contract(g, a, b).graph;
    r.derived_graph = to_edge_list_string(merged);
    if (auto why = detail::isolation_guard(g, merged)) return detail::gate_failed(std::move(r), *why);
    if (g.adjacent(a, b)) r.flags.push_back("adjacent_pair");
    const auto al = detail::spec_Nbar(g), be = detail::spec_Nbar(merged);
    detail::record(r, "alpha", al);
    detail::record(r, "beta", be);
    r.hypothesis_met = true;
    r.tol = scaled_tolerance(tol, {&al, &be});
    LinkLog log(r);
    for (int p = 1; p <= detail::order_of(be); ++p) {
        const double prev = p > 1 ? detail::at(al, p - 1) : -2.0;
        log.require("alpha_{p-1} <= beta_p", p, prev, detail::at(be, p));
        log.require("beta_p <= alpha_{p+1}", p, detail::at(be, p), detail::at(al, p + 1));
    }
    return r;
}

} // namespace sgspec::verify
