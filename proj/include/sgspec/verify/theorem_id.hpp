#pragma once

#include <sgspec/error.hpp>

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace sgspec::verify {

enum class TheoremId {
    T2_1, // vertex deletion, Laplacian
    C2_2, // deletion of a dominating vertex
    L2_3, // edge deletion, Laplacian
    T2_4, // C_{m+1} against C_m
    C2_5, // C_{m+1} against C_m, arbitrary signatures
    T2_7, // pendant vertex deletion
    C2_8, // signed paths
    C2_9, // signed stars
    L3_1, // Laplacian against net-Laplacian
    T3_2, // negative edge deletion, net-Laplacian
    T3_3, // positive edge deletion, net-Laplacian
    T3_4, // vertex deletion, net-Laplacian
    C3_5, // vertex with no negative edge
    C3_6, // vertex with no positive edge
    C3_7, // complete co-regular graphs
    B4,   // normalized spectrum inside [-2, 2]
    T4_1, // negative edge deletion, normalized
    T4_2, // positive edge deletion, normalized
    T4_3, // allowable contraction, normalized
};

inline constexpr std::array kAllTheorems = {
    TheoremId::T2_1, TheoremId::C2_2, TheoremId::L2_3, TheoremId::T2_4, TheoremId::C2_5,
    TheoremId::T2_7, TheoremId::C2_8, TheoremId::C2_9, TheoremId::L3_1, TheoremId::T3_2,
    TheoremId::T3_3, TheoremId::T3_4, TheoremId::C3_5, TheoremId::C3_6, TheoremId::C3_7,
    TheoremId::B4,   TheoremId::T4_1, TheoremId::T4_2, TheoremId::T4_3,
};

constexpr std::string_view to_string(TheoremId id) noexcept {
    switch (id) {
    case TheoremId::T2_1: return "T2.1";
    case TheoremId::C2_2: return "C2.2";
    case TheoremId::L2_3: return "L2.3";
    case TheoremId::T2_4: return "T2.4";
    case TheoremId::C2_5: return "C2.5";
    case TheoremId::T2_7: return "T2.7";
    case TheoremId::C2_8: return "C2.8";
    case TheoremId::C2_9: return "C2.9";
    case TheoremId::L3_1: return "L3.1";
    case TheoremId::T3_2: return "T3.2";
    case TheoremId::T3_3: return "T3.3";
    case TheoremId::T3_4: return "T3.4";
    case TheoremId::C3_5: return "C3.5";
    case TheoremId::C3_6: return "C3.6";
    case TheoremId::C3_7: return "C3.7";
    case TheoremId::B4: return "B4";
    case TheoremId::T4_1: return "T4.1";
    case TheoremId::T4_2: return "T4.2";
    case TheoremId::T4_3: return "T4.3";
    }
    return "?";
}

inline std::optional<TheoremId> parse_theorem(std::string_view text) {
    for (auto id : kAllTheorems)
        if (to_string(id) == text) return id;
    return std::nullopt;
}

inline TheoremId theorem_from_string(std::string_view text) {
    if (auto id = parse_theorem(text)) return *id;
    throw Error(ErrorKind::ArgMismatch, "unknown theorem id '" + std::string(text) + "'");
}

} // namespace sgspec::verify
