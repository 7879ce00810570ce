#pragma once

// Seeded campaigns. Sample i of theorem t draws from the stream
// SplitMix64::derive(seed, {index of t, i}); inputs are built so the
// theorem's hypothesis holds whenever the random topology allows it.

#include <sgspec/verify/checkers.hpp>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace sgspec::verify {

struct CampaignConfig {
    std::vector<TheoremId> theorems{kAllTheorems.begin(), kAllTheorems.end()};
    int n_min = 4;
    int n_max = 12;
    double p = 0.5; // edge probability
    double q = 0.5; // negative-edge probability
    int samples = 1000; // per theorem
    std::uint64_t seed = 1;
    double tol = kDefaultTol;
    unsigned threads = 0; // 0: SGSPEC_THREADS or hardware concurrency
};

struct TheoremSummary {
    TheoremId theorem = TheoremId::T2_1;
    int checks = 0;
    int holds = 0;   // hypothesis met and every link within tolerance
    int fails = 0;   // hypothesis met and some link violated
    int skipped = 0; // hypothesis not met
    double worst_slack = 0.0;
    int worst_index = -1; // index into CampaignResult::reports, -1 if none evaluated

    friend bool operator==(const TheoremSummary&, const TheoremSummary&) = default;
};

struct CampaignResult {
    CampaignConfig config;
    std::vector<InterlacingReport> reports; // theorem-major, then sample order
    std::vector<TheoremSummary> summary;

    int total_fails() const {
        int f = 0;
        for (const auto& s : summary) f += s.fails;
        return f;
    }
};

/// Smallest order the campaign generator accepts for a theorem.
constexpr int min_order(TheoremId id) noexcept {
    switch (id) {
    case TheoremId::T2_4:
    case TheoremId::C2_5: return 4; // C_{m+1} with m >= 3
    case TheoremId::C2_8:
    case TheoremId::C2_9:
    case TheoremId::T4_1:
    case TheoremId::T4_2:
    case TheoremId::T4_3: return 3;
    case TheoremId::L3_1:
    case TheoremId::B4: return 1;
    default: return 2;
    }
}

inline void validate(const CampaignConfig& cfg) {
    auto bad = [](const std::string& why) { throw Error(ErrorKind::ConfigInvalid, why); };
    if (cfg.samples < 1) bad("samples must be >= 1");
    if (cfg.theorems.empty()) bad("no theorems selected");
    if (cfg.n_min > cfg.n_max) bad("n-min exceeds n-max");
    if (cfg.n_max > 256) bad("n-max above 256");
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) bad("p must lie in [0,1]");
    if (!(cfg.q >= 0.0 && cfg.q <= 1.0)) bad("q must lie in [0,1]");
    if (!(cfg.tol >= 0.0) || !std::isfinite(cfg.tol)) bad("tol must be finite and non-negative");
    for (auto id : cfg.theorems)
        if (cfg.n_min < min_order(id))
            bad(std::string(to_string(id)) + " needs n-min >= " + std::to_string(min_order(id)));
}

namespace detail {

inline Sign draw_sign(SplitMix64& rng, double q) { return rng.bernoulli(q) ? Sign::minus : Sign::plus; }

inline Vertex draw_vertex(SplitMix64& rng, int n) { return static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))); }

// Vertex other than v.
inline Vertex draw_other(SplitMix64& rng, int n, Vertex v) {
    const Vertex w = draw_vertex(rng, n - 1);
    return w >= v ? w + 1 : w;
}

inline std::vector<Edge> set_sign(std::vector<Edge> edges, std::size_t i, Sign s) {
    edges[i].sign = s;
    return edges;
}

// Attaches every isolated vertex to a random other vertex.
inline SignedGraph repair_isolated(const SignedGraph& g, SplitMix64& rng, double q) {
    if (g.order() < 2) return g;
    std::vector<Edge> edges = g.edges();
    std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
    for (const auto& e : edges) ++deg[e.u], ++deg[e.v];
    for (Vertex v = 0; v < g.order(); ++v) {
        if (deg[v] != 0) continue;
        const Vertex w = draw_other(rng, g.order(), v);
        edges.push_back({v, w, draw_sign(rng, q)});
        ++deg[v], ++deg[w];
    }
    return SignedGraph(g.order(), edges);
}

inline SignedGraph ensure_edge(const SignedGraph& g, SplitMix64& rng, double q) {
    if (g.size() > 0) return g;
    const Vertex u = draw_vertex(rng, g.order());
    return add_edge(g, u, draw_other(rng, g.order(), u), draw_sign(rng, q));
}

// Joins components into one by linking each to a random earlier vertex.
inline SignedGraph connect(const SignedGraph& g, SplitMix64& rng, double q) {
    const auto comp = components(g);
    std::vector<Edge> edges = g.edges();
    int seen = 0;
    std::vector<Vertex> earlier;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (comp[v] == seen) {
            if (!earlier.empty())
                edges.push_back({v, earlier[rng.below(earlier.size())], draw_sign(rng, q)});
            ++seen;
        }
        earlier.push_back(v);
    }
    return SignedGraph(g.order(), edges);
}

// Gives every edge at v the sign s, adding one edge if v is isolated.
inline SignedGraph force_vertex_sign(const SignedGraph& g, Vertex v, Sign s, SplitMix64& rng) {
    std::vector<Edge> edges = g.edges();
    bool any = false;
    for (auto& e : edges)
        if (e.u == v || e.v == v) e.sign = s, any = true;
    if (!any) edges.push_back({v, draw_other(rng, g.order(), v), s});
    return SignedGraph(g.order(), edges);
}

// K_n whose negative edges form a circulant graph under a random relabelling,
// so every vertex has the same negative degree.
inline SignedGraph complete_coregular(int n, SplitMix64& rng, double q) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    std::vector<char> negative_distance(static_cast<std::size_t>(n / 2 + 1), 0);
    for (int d = 1; d <= n / 2; ++d) negative_distance[d] = rng.bernoulli(q);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int d = std::min(j - i, n - (j - i));
            edges.push_back({perm[i], perm[j], negative_distance[d] ? Sign::minus : Sign::plus});
        }
    return SignedGraph(n, edges);
}

// An edge whose removal leaves no isolated vertex, with its sign forced.
inline std::pair<SignedGraph, std::optional<Edge>> normalized_edge_case(const SignedGraph& base, Sign s,
                                                                       SplitMix64& rng, double q) {
    const auto g = repair_isolated(base, rng, q);
    std::vector<std::size_t> ok;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const auto& e = g.edges()[i];
        if (g.degree(e.u) >= 2 && g.degree(e.v) >= 2) ok.push_back(i);
    }
    if (ok.empty()) return {g, std::nullopt};
    const auto i = ok[rng.below(ok.size())];
    const SignedGraph h(g.order(), set_sign(g.edges(), i, s));
    return {h, h.edges()[i]};
}

// A pair {a, b} with N(a) and N(b) disjoint: common neighbours lose their
// edge to b, and b is reattached outside N[a] if that isolates it.
inline std::tuple<SignedGraph, Vertex, Vertex> contraction_case(const SignedGraph& base, SplitMix64& rng, double q) {
    const int n = base.order();
    const Vertex a = draw_vertex(rng, n);
    const Vertex b = draw_other(rng, n, a);
    std::vector<Edge> edges;
    for (const auto& e : base.edges()) {
        const bool at_b = e.u == b || e.v == b;
        const Vertex t = e.u == b ? e.v : e.u;
        if (at_b && t != a && base.adjacent(t, a)) continue;
        edges.push_back(e);
    }
    SignedGraph g(n, edges);
    if (g.degree(b) == 0) {
        std::vector<Vertex> outside;
        for (Vertex t = 0; t < n; ++t)
            if (t != a && t != b && !g.adjacent(t, a)) outside.push_back(t);
        if (!outside.empty()) g = add_edge(g, b, outside[rng.below(outside.size())], draw_sign(rng, q));
    }
    return {repair_isolated(g, rng, q), a, b};
}

} // namespace detail

/// One campaign sample; deterministic in (cfg, theorem, sample).
inline InterlacingReport run_sample(const CampaignConfig& cfg, TheoremId id, int sample) {
    SplitMix64 rng(SplitMix64::derive(cfg.seed, {static_cast<std::uint64_t>(id), static_cast<std::uint64_t>(sample)}));
    const int n = rng.between(cfg.n_min, cfg.n_max);
    const double tol = cfg.tol;
    const double q = cfg.q;
    auto base = [&] { return random_signed_graph(n, cfg.p, q, rng.next()); };

    switch (id) {
    case TheoremId::T2_1: {
        const auto g = base();
        return check_T2_1(g, detail::draw_vertex(rng, n), tol);
    }
    case TheoremId::C2_2: {
        const auto g0 = base();
        const Vertex v = detail::draw_vertex(rng, n);
        std::vector<Edge> edges = g0.edges();
        for (Vertex t = 0; t < n; ++t)
            if (t != v && !g0.adjacent(t, v)) edges.push_back({v, t, detail::draw_sign(rng, q)});
        return check_C2_2(SignedGraph(n, edges), v, tol);
    }
    case TheoremId::L2_3: {
        const auto g = detail::ensure_edge(base(), rng, q);
        const auto& e = g.edges()[rng.below(g.size())];
        return check_L2_3(g, e.u, e.v, tol);
    }
    case TheoremId::T2_4: {
        const int m = n - 1;
        std::vector<Sign> sig(static_cast<std::size_t>(m + 1));
        for (auto& s : sig) s = detail::draw_sign(rng, q);
        return check_T2_4(m, sig, detail::draw_sign(rng, 0.5), tol);
    }
    case TheoremId::C2_5: return check_C2_5(n - 1, rng.next(), tol);
    case TheoremId::T2_7: {
        const auto g0 = base();
        const Vertex u = detail::draw_vertex(rng, n);
        std::vector<Edge> edges;
        for (const auto& e : g0.edges())
            if (e.u != u && e.v != u) edges.push_back(e);
        edges.push_back({u, detail::draw_other(rng, n, u), detail::draw_sign(rng, q)});
        return check_T2_7(SignedGraph(n, edges), u, tol);
    }
    case TheoremId::C2_8: return check_C2_8_C2_9(TreeKind::path, n - 1, rng.next(), tol);
    case TheoremId::C2_9: return check_C2_8_C2_9(TreeKind::star, n - 1, rng.next(), tol);
    case TheoremId::L3_1: return check_L3_1(base(), tol);
    case TheoremId::T3_2:
    case TheoremId::T3_3: {
        const auto g0 = detail::ensure_edge(base(), rng, q);
        const auto i = rng.below(g0.size());
        const Sign s = id == TheoremId::T3_2 ? Sign::minus : Sign::plus;
        const SignedGraph g(n, detail::set_sign(g0.edges(), i, s));
        const auto& e = g.edges()[i];
        return id == TheoremId::T3_2 ? check_T3_2(g, e.u, e.v, tol) : check_T3_3(g, e.u, e.v, tol);
    }
    case TheoremId::T3_4: {
        const auto g = detail::connect(base(), rng, q);
        return check_T3_4(g, detail::draw_vertex(rng, n), tol);
    }
    case TheoremId::C3_5:
    case TheoremId::C3_6: {
        const auto g0 = base();
        const Vertex v = detail::draw_vertex(rng, n);
        const Sign s = id == TheoremId::C3_5 ? Sign::plus : Sign::minus;
        const auto g = detail::force_vertex_sign(g0, v, s, rng);
        return id == TheoremId::C3_5 ? check_C3_5(g, v, tol) : check_C3_6(g, v, tol);
    }
    case TheoremId::C3_7: {
        const auto g = detail::complete_coregular(n, rng, q);
        return check_C3_7(g, detail::draw_vertex(rng, n), tol);
    }
    case TheoremId::B4: return check_B4(detail::repair_isolated(base(), rng, q), tol);
    case TheoremId::T4_1:
    case TheoremId::T4_2: {
        const Sign s = id == TheoremId::T4_1 ? Sign::minus : Sign::plus;
        const auto [g, e] = detail::normalized_edge_case(base(), s, rng, q);
        if (!e) {
            auto r = detail::start(id, g, "");
            return detail::gate_failed(std::move(r), "no edge can be removed without isolating a vertex");
        }
        return id == TheoremId::T4_1 ? check_T4_1(g, e->u, e->v, tol) : check_T4_2(g, e->u, e->v, tol);
    }
    case TheoremId::T4_3: {
        const auto [g, a, b] = detail::contraction_case(base(), rng, q);
        return check_T4_3(g, a, b, tol);
    }
    }
    throw Error(ErrorKind::ArgMismatch, "unknown theorem");
}

inline unsigned campaign_threads(const CampaignConfig& cfg) {
    unsigned t = cfg.threads;
    if (t == 0) {
        if (const char* env = std::getenv("SGSPEC_THREADS")) t = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    }
    if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
    return t;
}

/// Runs every (theorem, sample) pair. Reports are stored in theorem order,
/// then sample order, regardless of how the work was scheduled. Violations
/// are counted in the summary rather than thrown so the evidence is kept.
inline CampaignResult run_campaign(const CampaignConfig& cfg) {
    validate(cfg);
    CampaignResult out;
    out.config = cfg;
    const std::size_t per = static_cast<std::size_t>(cfg.samples);
    const std::size_t total = per * cfg.theorems.size();
    out.reports.resize(total);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t k = next++; k < total; k = next++) {
            try {
                out.reports[k] = run_sample(cfg, cfg.theorems[k / per], static_cast<int>(k % per));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = total;
            }
        }
    };
    const unsigned threads = std::min<std::size_t>(campaign_threads(cfg), total);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t t = 0; t < cfg.theorems.size(); ++t) {
        TheoremSummary s;
        s.theorem = cfg.theorems[t];
        for (std::size_t i = t * per; i < (t + 1) * per; ++i) {
            const auto& r = out.reports[i];
            ++s.checks;
            if (!r.hypothesis_met) {
                ++s.skipped;
                continue;
            }
            r.holds ? ++s.holds : ++s.fails;
            if (s.worst_index < 0 || r.worst_slack < s.worst_slack) {
                s.worst_slack = r.worst_slack;
                s.worst_index = static_cast<int>(i);
            }
        }
        out.summary.push_back(s);
    }
    return out;
}

} // namespace sgspec::verify
