#pragma once

// Adjacency A, Laplacian L = D - A, net-Laplacian N = D^pm - A and the
// normalized net-Laplacian D^{-1/2} N D^{-1/2} of a signed graph, plus the
// edge-sum quadratic forms used as independent checks on the matrices.

#include <sgspec/signed_graph.hpp>
#include <sgspec/sym_matrix.hpp>

#include <cmath>
#include <cstdint>
#include <span>

namespace sgspec {

using IntMatrix = SymMatrix<std::int64_t>;
using RealMatrix = SymMatrix<double>;

inline IntMatrix adjacency_exact(const SignedGraph& g) {
    IntMatrix a(static_cast<std::size_t>(g.order()));
    for (const auto& e : g.edges()) a.set(e.u, e.v, to_int(e.sign));
    return a;
}

inline IntMatrix laplacian_exact(const SignedGraph& g) {
    IntMatrix l(static_cast<std::size_t>(g.order()));
    for (const auto& e : g.edges()) {
        l.set(e.u, e.v, -to_int(e.sign));
        l.add(e.u, e.u, 1);
        l.add(e.v, e.v, 1);
    }
    return l;
}

// Diagonal carries sdeg = d+ - d-; a negative edge contributes -1 to both ends.
inline IntMatrix net_laplacian_exact(const SignedGraph& g) {
    IntMatrix m(static_cast<std::size_t>(g.order()));
    for (const auto& e : g.edges()) {
        m.set(e.u, e.v, -to_int(e.sign));
        m.add(e.u, e.u, to_int(e.sign));
        m.add(e.v, e.v, to_int(e.sign));
    }
    return m;
}

// D^- = diag(d^-).
inline IntMatrix negative_degree_matrix(const SignedGraph& g) {
    const auto p = degree_profile(g);
    IntMatrix m(p.order());
    for (std::size_t i = 0; i < p.order(); ++i) m.set(i, i, p.d_minus[i]);
    return m;
}

inline RealMatrix adjacency(const SignedGraph& g) { return adjacency_exact(g).cast<double>(); }
inline RealMatrix laplacian(const SignedGraph& g) { return laplacian_exact(g).cast<double>(); }
inline RealMatrix net_laplacian(const SignedGraph& g) { return net_laplacian_exact(g).cast<double>(); }

/// Entry (i,j) = N_ij / sqrt(d_i d_j); rows and columns of isolated vertices
/// are zero (the scaling entry is 0 when d_i = 0).
inline RealMatrix normalized_net_laplacian(const SignedGraph& g) {
    const auto p = degree_profile(g);
    RealMatrix m(p.order());
    for (std::size_t i = 0; i < p.order(); ++i) {
        if (p.d[i] > 0) m.set(i, i, static_cast<double>(p.sdeg(static_cast<Vertex>(i))) / p.d[i]);
    }
    for (const auto& e : g.edges()) {
        const double scale = std::sqrt(static_cast<double>(p.d[e.u]) * p.d[e.v]);
        m.set(e.u, e.v, -to_int(e.sign) / scale);
    }
    return m;
}

enum class MatrixKind { adjacency, laplacian, net, normalized };

inline RealMatrix build_matrix(const SignedGraph& g, MatrixKind kind) {
    switch (kind) {
    case MatrixKind::adjacency: return adjacency(g);
    case MatrixKind::laplacian: return laplacian(g);
    case MatrixKind::net: return net_laplacian(g);
    case MatrixKind::normalized: return normalized_net_laplacian(g);
    }
    return {};
}

// ---------------------------------------------------------------------------
// Quadratic forms evaluated edge by edge, without touching the matrices.

namespace detail {
inline void check_vector(const SignedGraph& g, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(g.order()))
        throw Error(ErrorKind::LengthMismatch, "vector length " + std::to_string(x.size()) +
                                                   " for order " + std::to_string(g.order()));
}
} // namespace detail

// sum over edges of (x_u - sigma(uv) x_v)^2 ; equals x^T L x.
inline double quad_form_laplacian(const SignedGraph& g, std::span<const double> x) {
    detail::check_vector(g, x);
    double acc = 0.0;
    for (const auto& e : g.edges()) {
        const double t = x[e.u] - to_int(e.sign) * x[e.v];
        acc += t * t;
    }
    return acc;
}

// x^T L x - 2 sum_i d^-_i x_i^2 ; equals x^T N x.
inline double quad_form_net_laplacian(const SignedGraph& g, std::span<const double> x) {
    double acc = quad_form_laplacian(g, x);
    for (const auto& e : g.edges()) {
        if (e.sign == Sign::minus) acc -= 2.0 * (x[e.u] * x[e.u] + x[e.v] * x[e.v]);
    }
    return acc;
}

/// x^T N x / sum_i d_i x_i^2, the Rayleigh quotient of the normalized
/// net-Laplacian at y = D^{1/2} x.
inline double quad_form_normalized(const SignedGraph& g, std::span<const double> x) {
    const double numerator = quad_form_net_laplacian(g, x);
    const auto p = degree_profile(g);
    double denominator = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) denominator += p.d[i] * x[i] * x[i];
    if (denominator == 0.0) throw Error(ErrorKind::ZeroDenominator, "sum d_i x_i^2 is zero");
    return numerator / denominator;
}

} // namespace sgspec
