#pragma once

#include <cstdint>

namespace sgspec {

// Edge sign; the underlying value is the algebraic +1 / -1.
enum class Sign : std::int8_t { minus = -1, plus = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

constexpr Sign operator*(Sign a, Sign b) noexcept {
    return a == b ? Sign::plus : Sign::minus;
}

constexpr Sign operator-(Sign s) noexcept {
    return s == Sign::plus ? Sign::minus : Sign::plus;
}

constexpr char to_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }

} // namespace sgspec
