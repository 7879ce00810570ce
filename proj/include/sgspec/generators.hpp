#pragma once

#include <sgspec/rng.hpp>
#include <sgspec/signed_graph.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sgspec {

enum class Family { cycle, path, star, complete, empty };

constexpr std::string_view to_string(Family f) noexcept {
    switch (f) {
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::star: return "star";
    case Family::complete: return "complete";
    case Family::empty: return "empty";
    }
    return "?";
}

namespace signature {
struct AllPlus {};
struct AllMinus {};
// One sign per edge, in the family's canonical edge order.
struct Explicit {
    std::vector<Sign> signs;
};
struct SeededRandom {
    double q = 0.5; // probability of a negative edge
    std::uint64_t seed = 0;
};
} // namespace signature

using SignatureRule =
    std::variant<signature::AllPlus, signature::AllMinus, signature::Explicit, signature::SeededRandom>;

/// Unsigned edges of a family in canonical order:
/// cycle 0-1, 1-2, ..., (n-2)-(n-1), (n-1)-0; path 0-1, ..., (n-2)-(n-1);
/// star 0-1, 0-2, ..., 0-(n-1); complete lexicographic; empty none.
inline std::vector<std::pair<Vertex, Vertex>> family_edges(Family family, int n) {
    std::vector<std::pair<Vertex, Vertex>> out;
    auto bad = [&](int min_n) {
        throw Error(ErrorKind::BadOrder, std::string(to_string(family)) + " needs n >= " +
                                             std::to_string(min_n) + ", got " + std::to_string(n));
    };
    switch (family) {
    case Family::cycle:
        if (n < 3) bad(3);
        for (Vertex i = 0; i + 1 < n; ++i) out.emplace_back(i, i + 1);
        out.emplace_back(n - 1, 0);
        break;
    case Family::path:
        if (n < 1) bad(1);
        for (Vertex i = 0; i + 1 < n; ++i) out.emplace_back(i, i + 1);
        break;
    case Family::star:
        if (n < 2) bad(2);
        for (Vertex i = 1; i < n; ++i) out.emplace_back(0, i);
        break;
    case Family::complete:
        if (n < 1) bad(1);
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j) out.emplace_back(i, j);
        break;
    case Family::empty:
        if (n < 0) bad(0);
        break;
    }
    return out;
}

inline SignedGraph generate(Family family, int n, const SignatureRule& rule) {
    const auto pairs = family_edges(family, n);
    std::vector<Sign> signs(pairs.size(), Sign::plus);
    std::visit(
        [&](const auto& r) {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, signature::AllMinus>) {
                std::fill(signs.begin(), signs.end(), Sign::minus);
            } else if constexpr (std::is_same_v<R, signature::Explicit>) {
                if (r.signs.size() != pairs.size())
                    throw Error(ErrorKind::LengthMismatch,
                                std::to_string(r.signs.size()) + " signs for " +
                                    std::to_string(pairs.size()) + " edges");
                signs = r.signs;
            } else if constexpr (std::is_same_v<R, signature::SeededRandom>) {
                if (!(r.q >= 0.0 && r.q <= 1.0))
                    throw Error(ErrorKind::BadProbability, "q must lie in [0,1]");
                SplitMix64 rng(r.seed);
                for (auto& s : signs) s = rng.bernoulli(r.q) ? Sign::minus : Sign::plus;
            }
        },
        rule);
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) edges.push_back({pairs[i].first, pairs[i].second, signs[i]});
    return SignedGraph(n, edges);
}

/// Erdos-Renyi G(n, p) with each present edge negative with probability q.
/// Pairs are visited in lexicographic order; each pair consumes one draw for
/// presence and, if present, one draw for the sign.
inline SignedGraph random_signed_graph(int n, double p, double q, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0))
        throw Error(ErrorKind::BadProbability, "p and q must lie in [0,1]");
    if (n < 0) throw Error(ErrorKind::BadOrder, "negative order");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (!rng.bernoulli(p)) continue;
            edges.push_back({i, j, rng.bernoulli(q) ? Sign::minus : Sign::plus});
        }
    }
    return SignedGraph(n, edges);
}

} // namespace sgspec
