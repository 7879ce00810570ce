#pragma once

// Independent spectrum oracle for small matrices.
//
// The characteristic polynomial det(lambda I - M) is formed exactly with the
// Faddeev-LeVerrier recurrence over rationals (doubles convert to rationals
// without rounding). Eigenvalues are then isolated by bisection inside the
// Gershgorin disc: because a symmetric matrix has a real-rooted polynomial,
// Descartes' rule of signs applied to p(x + t) counts the eigenvalues above x
// exactly, multiplicities included. Bisection runs on the dyadic grid
// k / 2^kGridBits so every count is done in exact integer arithmetic.

#include <sgspec/eigen.hpp>
#include <sgspec/sym_matrix.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <vector>

namespace sgspec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

constexpr std::size_t kCharpolyMaxDim = 6;

/// coeffs[k] multiplies lambda^k; coeffs.back() == 1.
struct CharPoly {
    std::vector<Rational> coeffs;

    std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
        return acc;
    }
};

inline CharPoly characteristic_polynomial(const SymMatrix<double>& m) {
    const std::size_t n = m.dim();
    if (n > kCharpolyMaxDim)
        throw Error(ErrorKind::DimensionTooLarge,
                    "charpoly oracle supports dim <= " + std::to_string(kCharpolyMaxDim));
    using Mat = std::vector<std::vector<Rational>>;
    Mat a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));

    CharPoly p;
    p.coeffs.assign(n + 1, Rational(0));
    p.coeffs[n] = 1;
    Mat mk(n, std::vector<Rational>(n, Rational(0))); // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        Mat next(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational acc = 0;
                for (std::size_t l = 0; l < n; ++l) acc += a[i][l] * mk[l][j];
                next[i][j] = acc;
            }
            next[i][i] += p.coeffs[n - k + 1];
        }
        mk = std::move(next);
        // c_{n-k} = -tr(A M_k) / k
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * mk[l][i];
        p.coeffs[n - k] = -tr / static_cast<int>(k);
    }
    return p;
}

inline Rational determinant_exact(const SymMatrix<double>& m) {
    const auto p = characteristic_polynomial(m);
    return (m.dim() % 2 == 0) ? p.coeffs[0] : Rational(-p.coeffs[0]);
}

namespace detail {

constexpr unsigned kGridBits = 40;

// Number of sign changes in a coefficient sequence, zeros skipped.
inline int sign_variations(const std::vector<BigInt>& c) {
    int changes = 0;
    int last = 0;
    for (const auto& x : c) {
        const int s = x.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

class EigenCounter {
public:
    explicit EigenCounter(const CharPoly& p) : n_(p.degree()) {
        BigInt lcm = 1;
        for (const auto& c : p.coeffs) lcm = boost::multiprecision::lcm(lcm, denominator(c));
        // scaled_[i] = P_i * 2^(bits * (n - i)) so that 2^(bits n) p(y / 2^bits)
        // has integer coefficients in y.
        scaled_.reserve(n_ + 1);
        for (std::size_t i = 0; i <= n_; ++i) {
            BigInt integral = numerator(p.coeffs[i]) * (lcm / denominator(p.coeffs[i]));
            scaled_.push_back(integral << static_cast<unsigned>(kGridBits * (n_ - i)));
        }
    }

    // Eigenvalues strictly greater than k / 2^kGridBits.
    int count_above(const BigInt& k) const {
        std::vector<BigInt> c = scaled_;
        // Taylor shift y -> y + k.
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = n_; j-- > i;) c[j] += k * c[j + 1];
        // Roots exactly at the grid point are not "above"; drop them.
        std::size_t first = 0;
        while (first < c.size() && c[first] == 0) ++first;
        return sign_variations(std::vector<BigInt>(c.begin() + static_cast<std::ptrdiff_t>(first), c.end()));
    }

    std::size_t degree() const noexcept { return n_; }

private:
    std::size_t n_;
    std::vector<BigInt> scaled_;
};

} // namespace detail

inline OrderedSpectrum charpoly_spectrum_oracle(const SymMatrix<double>& m) {
    const std::size_t n = m.dim();
    const auto poly = characteristic_polynomial(m);
    const detail::EigenCounter counter(poly);

    double gershgorin = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        for (std::size_t j = 0; j < n; ++j) radius += std::abs(m(i, j));
        gershgorin = std::max(gershgorin, radius);
    }
    const BigInt bound = BigInt(static_cast<long long>(std::ceil(gershgorin)) + 1) << detail::kGridBits;

    std::vector<double> values;
    values.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        // Invariant: #(lambda <= lo) <= k < #(lambda <= hi).
        BigInt lo = -bound, hi = bound;
        while (hi - lo > 1) {
            const BigInt mid = lo + ((hi - lo) >> 1);
            const auto at_or_below = static_cast<std::size_t>(static_cast<int>(n) - counter.count_above(mid));
            if (at_or_below > k) hi = mid;
            else lo = mid;
        }
        values.push_back(std::ldexp(hi.convert_to<double>(), -static_cast<int>(detail::kGridBits)));
    }
    return {std::move(values)};
}

} // namespace sgspec
