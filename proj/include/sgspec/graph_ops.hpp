#pragma once

#include <sgspec/signed_graph.hpp>

#include <algorithm>
#include <optional>
#include <vector>

namespace sgspec {

/// Old-to-new vertex relabelling after a surgery. Surviving vertices keep
/// their relative order; removed ones map to -1. For a contraction the two
/// merged vertices map to -1 and `merged` holds the new vertex.
struct VertexMap {
    std::vector<Vertex> to_new;
    std::optional<Vertex> merged;

    Vertex operator()(Vertex old) const { return to_new.at(static_cast<std::size_t>(old)); }
};

struct Surgery {
    SignedGraph graph;
    VertexMap map;
};

inline Surgery delete_vertex(const SignedGraph& g, Vertex v) {
    g.check_vertex(v);
    VertexMap map;
    map.to_new.resize(static_cast<std::size_t>(g.order()));
    for (Vertex x = 0; x < g.order(); ++x) map.to_new[x] = x < v ? x : (x == v ? -1 : x - 1);
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (e.u == v || e.v == v) continue;
        edges.push_back({map.to_new[e.u], map.to_new[e.v], e.sign});
    }
    return {SignedGraph(g.order() - 1, edges), std::move(map)};
}

struct EdgeDeletion {
    SignedGraph graph;
    Sign removed; // sign of the deleted edge
};

inline EdgeDeletion delete_edge(const SignedGraph& g, Vertex u, Vertex v) {
    const auto s = g.sign_of(u, v);
    if (!s)
        throw Error(ErrorKind::NoSuchEdge, "{" + std::to_string(u) + "," + std::to_string(v) + "}");
    const Vertex lo = std::min(u, v), hi = std::max(u, v);
    std::vector<Edge> edges;
    edges.reserve(g.size() - 1);
    for (const auto& e : g.edges())
        if (!(e.u == lo && e.v == hi)) edges.push_back(e);
    return {SignedGraph(g.order(), edges), *s};
}

inline SignedGraph add_edge(const SignedGraph& g, Vertex u, Vertex v, Sign s) {
    g.check_vertex(u);
    g.check_vertex(v);
    std::vector<Edge> edges = g.edges();
    edges.push_back({u, v, s});
    return SignedGraph(g.order(), edges); // rejects self-loops and duplicates
}

struct Neighbourhoods {
    std::vector<Vertex> open;   // N(t)
    std::vector<Vertex> closed; // N[t] = N(t) + t
};

inline Neighbourhoods neighborhoods(const SignedGraph& g, Vertex t) {
    Neighbourhoods out;
    for (const auto& [w, s] : g.neighbours(t)) out.open.push_back(w);
    out.closed = out.open;
    out.closed.insert(std::lower_bound(out.closed.begin(), out.closed.end(), t), t);
    return out;
}

namespace detail {
inline void check_pair(const SignedGraph& g, Vertex a, Vertex b) {
    g.check_vertex(a);
    g.check_vertex(b);
    if (a == b) throw Error(ErrorKind::SameVertex, "vertex " + std::to_string(a) + " given twice");
}
} // namespace detail

inline bool disjoint_open_neighborhoods(const SignedGraph& g, Vertex a, Vertex b) {
    detail::check_pair(g, a, b);
    for (const auto& [t, s] : g.neighbours(a))
        if (g.adjacent(t, b)) return false;
    return true;
}

/// Every common neighbour t of a and b sees both with the same sign.
inline bool is_allowable_contraction(const SignedGraph& g, Vertex a, Vertex b) {
    detail::check_pair(g, a, b);
    for (const auto& [t, s] : g.neighbours(a)) {
        if (t == b) continue;
        if (auto sb = g.sign_of(t, b); sb && *sb != s) return false;
    }
    return true;
}

/// Allowable contraction of {a, b}: both are replaced by one vertex adjacent
/// to N(a) + N(b) - {a, b}, inheriting sigma(ta) or sigma(tb) (equal when t
/// is a common neighbour). An edge ab disappears. The merged vertex takes the
/// smaller index; vertices above the larger index shift down by one.
inline Surgery contract(const SignedGraph& g, Vertex a, Vertex b) {
    detail::check_pair(g, a, b);
    if (!is_allowable_contraction(g, a, b))
        throw Error(ErrorKind::NotAllowable, "common neighbour sees " + std::to_string(a) + " and " +
                                                 std::to_string(b) + " with different signs");
    const Vertex keep = std::min(a, b), drop = std::max(a, b);
    VertexMap map;
    map.to_new.resize(static_cast<std::size_t>(g.order()));
    for (Vertex x = 0; x < g.order(); ++x) map.to_new[x] = x < drop ? x : x - 1;
    map.to_new[keep] = -1;
    map.to_new[drop] = -1;
    map.merged = keep;

    std::vector<Edge> edges;
    std::vector<bool> linked(static_cast<std::size_t>(g.order()), false);
    for (const auto& e : g.edges()) {
        const bool ua = e.u == a || e.u == b;
        const bool va = e.v == a || e.v == b;
        if (ua && va) continue;
        if (!ua && !va) {
            edges.push_back({map.to_new[e.u], map.to_new[e.v], e.sign});
            continue;
        }
        const Vertex t = ua ? e.v : e.u;
        if (linked[t]) continue; // common neighbour: one edge, same sign
        linked[t] = true;
        edges.push_back({map.to_new[t], keep, e.sign});
    }
    return {SignedGraph(g.order() - 1, edges), std::move(map)};
}

} // namespace sgspec
