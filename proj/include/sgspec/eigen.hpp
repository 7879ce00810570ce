#pragma once

// Dense symmetric eigensolver: Householder reduction to tridiagonal form,
// then implicit-shift QL (the tql2 scheme). Eigenvectors are accumulated only
// when requested.

#include <sgspec/sym_matrix.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <span>
#include <vector>

namespace sgspec {

/// Eigenvalues in non-decreasing order; position p (1-based in reports) is
/// values[p - 1].
struct OrderedSpectrum {
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    bool empty() const noexcept { return values.empty(); }
    double operator[](std::size_t i) const { return values[i]; }
    double front() const { return values.front(); }
    double back() const { return values.back(); }

    double sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

    // max(1, |values|_inf)
    double scale() const {
        double s = 1.0;
        for (double v : values) s = std::max(s, std::abs(v));
        return s;
    }

    bool is_ordered() const {
        const double slack = 1e-12 * scale();
        for (std::size_t i = 0; i + 1 < values.size(); ++i)
            if (values[i] > values[i + 1] + slack) return false;
        return true;
    }

    friend bool operator==(const OrderedSpectrum&, const OrderedSpectrum&) = default;
};

struct EigenDecomposition {
    OrderedSpectrum spectrum;
    std::vector<Vector> vectors; // vectors[k] pairs with spectrum[k], unit norm

    // ||M v_k - lambda_k v_k||_2
    double residual(const SymMatrix<double>& m, std::size_t k) const {
        const auto mv = m.multiply(vectors[k]);
        double acc = 0.0;
        for (std::size_t i = 0; i < mv.size(); ++i) {
            const double r = mv[i] - spectrum[k] * vectors[k][i];
            acc += r * r;
        }
        return std::sqrt(acc);
    }
};

namespace detail {

constexpr int kSweepsPerEigenvalue = 64;
constexpr double kDeflation = 1e-15;

struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> sub; // sub[i] couples i and i+1; sub[n-1] = 0
    std::vector<Vector> q;   // row-major orthogonal factor, empty unless requested
};

inline Tridiagonal householder_tridiagonalize(const SymMatrix<double>& m, bool want_q) {
    const std::size_t n = m.dim();
    std::vector<Vector> a(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);

    std::vector<Vector> reflectors; // v for H_k = I - beta v v^T on rows k+1..
    std::vector<double> betas;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t len = n - k - 1;
        Vector v(len);
        double norm2 = 0.0;
        for (std::size_t i = 0; i < len; ++i) {
            v[i] = a[k + 1 + i][k];
            norm2 += v[i] * v[i];
        }
        double beta = 0.0;
        if (norm2 > 0.0) {
            const double norm = std::sqrt(norm2);
            const double alpha = v[0] > 0.0 ? -norm : norm;
            v[0] -= alpha;
            const double vtv = norm2 - 2.0 * alpha * (v[0] + alpha) + alpha * alpha;
            if (vtv > 0.0) {
                beta = 2.0 / vtv;
                // p = beta * B v, w = p - (beta/2)(p^T v) v on the trailing block B.
                Vector p(len, 0.0);
                for (std::size_t i = 0; i < len; ++i) {
                    double acc = 0.0;
                    for (std::size_t j = 0; j < len; ++j) acc += a[k + 1 + i][k + 1 + j] * v[j];
                    p[i] = beta * acc;
                }
                double ptv = 0.0;
                for (std::size_t i = 0; i < len; ++i) ptv += p[i] * v[i];
                const double half = 0.5 * beta * ptv;
                for (std::size_t i = 0; i < len; ++i) p[i] -= half * v[i];
                for (std::size_t i = 0; i < len; ++i)
                    for (std::size_t j = 0; j < len; ++j)
                        a[k + 1 + i][k + 1 + j] -= v[i] * p[j] + p[i] * v[j];
                a[k + 1][k] = a[k][k + 1] = alpha;
                for (std::size_t i = 1; i < len; ++i) a[k + 1 + i][k] = a[k][k + 1 + i] = 0.0;
            }
        }
        if (want_q) {
            reflectors.push_back(std::move(v));
            betas.push_back(beta);
        }
    }

    Tridiagonal t;
    t.diag.resize(n);
    t.sub.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        t.diag[i] = a[i][i];
        if (i + 1 < n) t.sub[i] = 0.5 * (a[i + 1][i] + a[i][i + 1]);
    }
    if (want_q) {
        // Q = H_0 H_1 ... H_{n-3}, built right to left.
        t.q.assign(n, Vector(n, 0.0));
        for (std::size_t i = 0; i < n; ++i) t.q[i][i] = 1.0;
        for (std::size_t kk = reflectors.size(); kk-- > 0;) {
            const auto& v = reflectors[kk];
            const double beta = betas[kk];
            if (beta == 0.0) continue;
            const std::size_t off = kk + 1;
            for (std::size_t col = 0; col < n; ++col) {
                double dot = 0.0;
                for (std::size_t i = 0; i < v.size(); ++i) dot += v[i] * t.q[off + i][col];
                dot *= beta;
                if (dot == 0.0) continue;
                for (std::size_t i = 0; i < v.size(); ++i) t.q[off + i][col] -= dot * v[i];
            }
        }
    }
    return t;
}

// Implicit QL with Wilkinson-style shifts on (d, e). If z is non-empty its
// columns are rotated along with the iteration.
inline void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::vector<Vector>& z) {
    const std::size_t n = d.size();
    if (n == 0) return;
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(d[i]) + std::abs(e[i]));
    const double threshold = kDeflation * scale;
    const bool vectors = !z.empty();

    double shift_total = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        std::size_t m = l;
        while (m + 1 < n && std::abs(e[m]) > threshold) ++m;
        if (m > l) {
            int sweeps = 0;
            do {
                if (++sweeps > kSweepsPerEigenvalue)
                    throw Error(ErrorKind::NoConvergence,
                                "QL iteration exceeded " + std::to_string(kSweepsPerEigenvalue) +
                                    " sweeps at index " + std::to_string(l));
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0) r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                const double dl1 = d[l + 1];
                double h = g - d[l];
                for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
                shift_total += h;

                p = d[m];
                double c = 1.0, c2 = 1.0, c3 = 1.0;
                const double el1 = e[l + 1];
                double s = 0.0, s2 = 0.0;
                for (std::size_t i = m; i-- > l;) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = std::hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if (vectors) {
                        for (std::size_t k = 0; k < n; ++k) {
                            const double zk1 = z[k][i + 1];
                            z[k][i + 1] = s * z[k][i] + c * zk1;
                            z[k][i] = c * z[k][i] - s * zk1;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > threshold);
        }
        d[l] += shift_total;
        e[l] = 0.0;
    }
}

inline void require_symmetric(const SymMatrix<double>& m) {
    if (!m.is_symmetric()) throw Error(ErrorKind::NonSymmetric, "eigensolver input");
}

} // namespace detail

inline OrderedSpectrum eigenvalues(const SymMatrix<double>& m) {
    detail::require_symmetric(m);
    auto t = detail::householder_tridiagonalize(m, false);
    std::vector<Vector> none;
    detail::tridiagonal_ql(t.diag, t.sub, none);
    std::stable_sort(t.diag.begin(), t.diag.end());
    return {std::move(t.diag)};
}

template <class T>
OrderedSpectrum eigenvalues(const SymMatrix<T>& m) {
    return eigenvalues(m.template cast<double>());
}

inline EigenDecomposition eigen_decomposition(const SymMatrix<double>& m) {
    detail::require_symmetric(m);
    auto t = detail::householder_tridiagonalize(m, true);
    detail::tridiagonal_ql(t.diag, t.sub, t.q);
    const std::size_t n = m.dim();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return t.diag[a] < t.diag[b]; });
    EigenDecomposition out;
    out.spectrum.values.reserve(n);
    for (std::size_t k : order) {
        out.spectrum.values.push_back(t.diag[k]);
        Vector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = t.q[i][k];
        out.vectors.push_back(std::move(v));
    }
    return out;
}

/// x^T M x / x^T x.
inline double rayleigh(const SymMatrix<double>& m, std::span<const double> x) {
    double xx = 0.0;
    for (double v : x) xx += v * v;
    if (x.size() != m.dim()) throw Error(ErrorKind::LengthMismatch, "rayleigh vector length");
    if (xx == 0.0) throw Error(ErrorKind::ZeroVector, "rayleigh quotient of the zero vector");
    return m.quadratic_form(x) / xx;
}

/// Laplacian spectrum of a signed n-cycle: balanced gives 2 - 2cos(2 pi k/n),
/// unbalanced 2 - 2cos((2k+1) pi/n), k = 0..n-1.
inline OrderedSpectrum closed_form_cycle_spectrum(int n, bool balanced) {
    if (n < 3) throw Error(ErrorKind::BadOrder, "cycle needs n >= 3");
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double angle = balanced ? 2.0 * std::numbers::pi * k / n
                                      : (2.0 * k + 1.0) * std::numbers::pi / n;
        v.push_back(2.0 - 2.0 * std::cos(angle));
    }
    std::sort(v.begin(), v.end());
    return {std::move(v)};
}

// Laplacian spectrum of the all-positive path P_n: 2 - 2cos(k pi/n), k = 0..n-1.
inline OrderedSpectrum closed_form_path_spectrum(int n) {
    if (n < 1) throw Error(ErrorKind::BadOrder, "path needs n >= 1");
    std::vector<double> v;
    for (int k = 0; k < n; ++k) v.push_back(2.0 - 2.0 * std::cos(k * std::numbers::pi / n));
    std::sort(v.begin(), v.end());
    return {std::move(v)};
}

} // namespace sgspec
