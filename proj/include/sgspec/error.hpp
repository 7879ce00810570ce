#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgspec {

enum class ErrorKind {
    DuplicateEdge,
    SelfLoop,
    VertexOutOfRange,
    EmptyGraph,
    LengthMismatch,
    UnderlyingGraphMismatch,
    BadOrder,
    BadProbability,
    NoSuchEdge,
    NotAllowable,
    SameVertex,
    ZeroDenominator,
    ZeroVector,
    NonSymmetric,
    NoConvergence,
    DimensionTooLarge,
    ConfigInvalid,
    ParseError,
    ArgMismatch,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::UnderlyingGraphMismatch: return "UnderlyingGraphMismatch";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::BadProbability: return "BadProbability";
    case ErrorKind::NoSuchEdge: return "NoSuchEdge";
    case ErrorKind::NotAllowable: return "NotAllowable";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NonSymmetric: return "NonSymmetric";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ArgMismatch: return "ArgMismatch";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace sgspec
