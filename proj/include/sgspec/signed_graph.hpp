#pragma once

#include <sgspec/error.hpp>
#include <sgspec/sign.hpp>

#include <algorithm>
#include <compare>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sgspec {

using Vertex = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Sign sign = Sign::plus;

    friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected signed graph on vertices 0..n-1.
///
/// Edges are stored once with u < v, sorted lexicographically. The object is
/// immutable; every surgery returns a new graph.
class SignedGraph {
public:
    SignedGraph() = default;

    /// Validating constructor; accepts endpoints in either order.
    SignedGraph(int n, std::span<const Edge> edges) : n_(n), adjacency_(n < 0 ? 0 : n) {
        if (n < 0) throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");
        edges_.reserve(edges.size());
        for (const auto& e : edges) {
            if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
                throw Error(ErrorKind::VertexOutOfRange,
                            "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                ") outside 0.." + std::to_string(n - 1));
            if (e.u == e.v)
                throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(e.u));
            edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.sign});
        }
        std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
            return std::pair(a.u, a.v) < std::pair(b.u, b.v);
        });
        for (std::size_t i = 1; i < edges_.size(); ++i) {
            if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
                throw Error(ErrorKind::DuplicateEdge, "{" + std::to_string(edges_[i].u) + "," +
                                                          std::to_string(edges_[i].v) + "}");
        }
        for (const auto& e : edges_) {
            adjacency_[e.u].emplace_back(e.v, e.sign);
            adjacency_[e.v].emplace_back(e.u, e.sign);
        }
        for (auto& row : adjacency_) std::sort(row.begin(), row.end());
    }

    SignedGraph(int n, std::initializer_list<Edge> edges)
        : SignedGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Neighbours of v with the sign of the connecting edge, sorted by vertex.
    const std::vector<std::pair<Vertex, Sign>>& neighbours(Vertex v) const {
        check_vertex(v);
        return adjacency_[v];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }

    std::optional<Sign> sign_of(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& row = adjacency_[u];
        auto it = std::lower_bound(row.begin(), row.end(), v,
                                   [](const auto& entry, Vertex x) { return entry.first < x; });
        if (it == row.end() || it->first != v) return std::nullopt;
        return it->second;
    }

    bool adjacent(Vertex u, Vertex v) const { return sign_of(u, v).has_value(); }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw Error(ErrorKind::VertexOutOfRange,
                        "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n_ - 1));
    }

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<Vertex, Sign>>> adjacency_;
};

inline SignedGraph build_graph(int n, std::span<const Edge> edges) { return SignedGraph(n, edges); }

inline SignedGraph build_graph(int n, std::initializer_list<Edge> edges) {
    return SignedGraph(n, edges);
}

// Same underlying graph with every edge set to `s`.
inline SignedGraph with_uniform_sign(const SignedGraph& g, Sign s) {
    std::vector<Edge> edges = g.edges();
    for (auto& e : edges) e.sign = s;
    return SignedGraph(g.order(), edges);
}

inline bool same_underlying_graph(const SignedGraph& a, const SignedGraph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.edges()[i].u != b.edges()[i].u || a.edges()[i].v != b.edges()[i].v) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Degrees

struct DegreeProfile {
    std::vector<int> d;
    std::vector<int> d_plus;
    std::vector<int> d_minus;

    int sdeg(Vertex v) const { return d_plus.at(v) - d_minus.at(v); }
    std::size_t order() const noexcept { return d.size(); }
};

inline DegreeProfile degree_profile(const SignedGraph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    DegreeProfile p{std::vector<int>(n, 0), std::vector<int>(n, 0), std::vector<int>(n, 0)};
    for (const auto& e : g.edges()) {
        auto& side = e.sign == Sign::plus ? p.d_plus : p.d_minus;
        ++side[e.u];
        ++side[e.v];
        ++p.d[e.u];
        ++p.d[e.v];
    }
    return p;
}

struct NegativeDegreeRange {
    int min = 0; // delta^-
    int max = 0; // Delta^-
};

inline NegativeDegreeRange min_max_neg_degree(const SignedGraph& g) {
    if (g.order() == 0) throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
    const auto p = degree_profile(g);
    const auto [lo, hi] = std::minmax_element(p.d_minus.begin(), p.d_minus.end());
    return {*lo, *hi};
}

/// Common degree r and common net degree s of a co-regular signed graph.
struct CoRegularity {
    int r = 0;
    int s = 0;
    bool complete = false; // r == n - 1

    friend constexpr bool operator==(const CoRegularity&, const CoRegularity&) = default;
};

inline std::optional<CoRegularity> co_regularity(const SignedGraph& g) {
    if (g.order() == 0) return std::nullopt;
    const auto p = degree_profile(g);
    const int r = p.d[0];
    const int s = p.sdeg(0);
    for (Vertex v = 1; v < g.order(); ++v) {
        if (p.d[v] != r || p.sdeg(v) != s) return std::nullopt;
    }
    return CoRegularity{r, s, r == g.order() - 1};
}

// ---------------------------------------------------------------------------
// Switching and balance

struct SwitchingFunction {
    std::vector<Sign> alpha;

    static SwitchingFunction identity(int n) {
        return {std::vector<Sign>(static_cast<std::size_t>(n), Sign::plus)};
    }
    friend bool operator==(const SwitchingFunction&, const SwitchingFunction&) = default;
};

/// sigma^alpha(uv) = alpha(u) sigma(uv) alpha(v).
inline SignedGraph apply_switching(const SignedGraph& g, const SwitchingFunction& s) {
    if (s.alpha.size() != static_cast<std::size_t>(g.order()))
        throw Error(ErrorKind::LengthMismatch, "switching function has " +
                                                   std::to_string(s.alpha.size()) +
                                                   " entries for order " + std::to_string(g.order()));
    std::vector<Edge> edges = g.edges();
    for (auto& e : edges) e.sign = s.alpha[e.u] * e.sign * s.alpha[e.v];
    return SignedGraph(g.order(), edges);
}

/// Switching that carries g to the all-positive signature, if one exists.
///
/// Each spanning tree of the underlying forest is switched so its tree edges
/// become positive (BFS from the lowest vertex of each component, root gets
/// +); g is balanced iff every non-tree edge is positive afterwards.
inline std::optional<SwitchingFunction> balancing_switch(const SignedGraph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<Sign> alpha(n, Sign::plus);
    std::vector<bool> seen(n, false);
    std::queue<Vertex> frontier;
    for (Vertex root = 0; root < g.order(); ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        frontier.push(root);
        while (!frontier.empty()) {
            const Vertex u = frontier.front();
            frontier.pop();
            for (const auto& [w, s] : g.neighbours(u)) {
                if (seen[w]) continue;
                seen[w] = true;
                alpha[w] = alpha[u] * s; // makes alpha(u) s alpha(w) = +
                frontier.push(w);
            }
        }
    }
    for (const auto& e : g.edges()) {
        if (alpha[e.u] * e.sign * alpha[e.v] != Sign::plus) return std::nullopt;
    }
    return SwitchingFunction{std::move(alpha)};
}

inline bool is_balanced(const SignedGraph& g) { return balancing_switch(g).has_value(); }

/// g1 ~ g2 iff the product signature sigma1 * sigma2 is balanced.
inline bool switching_equivalent(const SignedGraph& g1, const SignedGraph& g2) {
    if (!same_underlying_graph(g1, g2))
        throw Error(ErrorKind::UnderlyingGraphMismatch,
                    "switching equivalence needs identical unsigned edge sets");
    std::vector<Edge> product = g1.edges();
    for (std::size_t i = 0; i < product.size(); ++i) product[i].sign = product[i].sign * g2.edges()[i].sign;
    return is_balanced(SignedGraph(g1.order(), product));
}

// ---------------------------------------------------------------------------
// Connectivity

/// Component label per vertex, labels dense in discovery order.
inline std::vector<int> components(const SignedGraph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> label(n, -1);
    int next = 0;
    std::queue<Vertex> frontier;
    for (Vertex root = 0; root < g.order(); ++root) {
        if (label[root] >= 0) continue;
        label[root] = next;
        frontier.push(root);
        while (!frontier.empty()) {
            const Vertex u = frontier.front();
            frontier.pop();
            for (const auto& [w, s] : g.neighbours(u)) {
                if (label[w] < 0) {
                    label[w] = next;
                    frontier.push(w);
                }
            }
        }
        ++next;
    }
    return label;
}

inline int component_count(const SignedGraph& g) {
    const auto label = components(g);
    return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

// The empty graph and K1 count as connected.
inline bool is_connected(const SignedGraph& g) { return component_count(g) <= 1; }

inline bool has_isolated_vertex(const SignedGraph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

} // namespace sgspec
