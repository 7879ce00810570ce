#pragma once

#include <sgspec/eigen.hpp>
#include <sgspec/error.hpp>
#include <sgspec/verify/theorem_id.hpp>

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sgspec::verify {

struct NamedSpectrum {
    std::string name; // "alpha", "beta", "mu"
    std::vector<double> values;

    friend bool operator==(const NamedSpectrum&, const NamedSpectrum&) = default;
};

/// A link that could not be evaluated because it indexes past the spectrum.
struct SkippedLink {
    std::string relation;
    int position = 0;

    friend bool operator==(const SkippedLink&, const SkippedLink&) = default;
};

/// Outcome of one interlacing check. Every link is an inequality lhs <= rhs
/// at a 1-based position p; its slack is rhs - lhs and it holds when
/// slack >= -tol. worst_slack and witness_position describe the smallest
/// slack seen (0 and 0 when nothing was evaluated).
struct InterlacingReport {
    TheoremId theorem = TheoremId::T2_1;
    bool hypothesis_met = false;
    bool holds = true;
    double worst_slack = 0.0;
    int witness_position = 0;
    std::string witness_relation;
    double tol = 0.0;
    std::string graph;         // the input graph, one-line edge list
    std::string derived_graph; // the graph after surgery
    std::string surgery;       // surgery arguments, e.g. "v=3" or "e=0-1"
    std::vector<NamedSpectrum> spectra;
    std::vector<SkippedLink> skipped;
    std::vector<std::string> flags; // informational observations
    std::string note;               // why the hypothesis failed, if it did

    bool violated() const noexcept { return hypothesis_met && !holds; }

    const NamedSpectrum* spectrum(std::string_view name) const {
        for (const auto& s : spectra)
            if (s.name == name) return &s;
        return nullptr;
    }

    friend bool operator==(const InterlacingReport&, const InterlacingReport&) = default;
};

/// 1e-9 style relative tolerance turned absolute: rel * max(1, |spectra|_inf).
inline double scaled_tolerance(double rel, std::initializer_list<const OrderedSpectrum*> spectra) {
    double s = 1.0;
    for (const auto* sp : spectra) s = std::max(s, sp->scale());
    return rel * s;
}

/// Accumulates links for one report.
class LinkLog {
public:
    explicit LinkLog(InterlacingReport& r) : r_(r) {
        r_.holds = true;
        r_.worst_slack = 0.0;
        r_.witness_position = 0;
        r_.witness_relation.clear();
    }

    void require(std::string_view relation, int position, double lhs, double rhs) {
        const double slack = rhs - lhs;
        if (!any_ || slack < r_.worst_slack) {
            any_ = true;
            r_.worst_slack = slack;
            r_.witness_position = position;
            r_.witness_relation = std::string(relation);
        }
        if (!(slack >= -r_.tol)) r_.holds = false; // NaN counts as failure
    }

    void skip(std::string_view relation, int position) {
        r_.skipped.push_back({std::string(relation), position});
    }

private:
    InterlacingReport& r_;
    bool any_ = false;
};

struct ChainResult {
    bool holds = true;
    double worst_slack = 0.0;
    int witness_position = 0; // 1-based, 0 for empty chains
};

/// lower_p <= mid_p <= upper_p for every p.
inline ChainResult check_chain(std::span<const double> lower, std::span<const double> mid,
                               std::span<const double> upper, double tol) {
    if (lower.size() != mid.size() || upper.size() != mid.size())
        throw Error(ErrorKind::LengthMismatch, "chain sequences differ in length");
    ChainResult out;
    for (std::size_t i = 0; i < mid.size(); ++i) {
        const double slack = std::min(mid[i] - lower[i], upper[i] - mid[i]);
        if (out.witness_position == 0 || slack < out.worst_slack) {
            out.worst_slack = slack;
            out.witness_position = static_cast<int>(i) + 1;
        }
        if (!(slack >= -tol)) out.holds = false;
    }
    return out;
}

} // namespace sgspec::verify
