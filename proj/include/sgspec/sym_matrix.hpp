#pragma once

#include <sgspec/error.hpp>
#include <sgspec/sign.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace sgspec {

using Vector = std::vector<double>;

/// Dense real symmetric matrix. Off-diagonal writes go through set(), which
/// stores both (i,j) and (j,i), so every instance is exactly symmetric.
template <class T>
class SymMatrix {
public:
    using value_type = T;

    SymMatrix() = default;
    explicit SymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, T{}) {}

    /// From explicit rows; rejects input that is not exactly symmetric.
    static SymMatrix from_rows(const std::vector<std::vector<T>>& rows) {
        SymMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size())
                throw Error(ErrorKind::LengthMismatch, "row " + std::to_string(i) + " has wrong length");
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < rows.size(); ++j) {
                if (rows[i][j] != rows[j][i])
                    throw Error(ErrorKind::NonSymmetric,
                                "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
                m.data_[i * m.dim_ + j] = rows[i][j];
            }
        }
        return m;
    }

    static SymMatrix identity(std::size_t dim) {
        SymMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m.set(i, i, T{1});
        return m;
    }

    std::size_t dim() const noexcept { return dim_; }

    T operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    void set(std::size_t i, std::size_t j, T value) {
        data_[i * dim_ + j] = value;
        data_[j * dim_ + i] = value;
    }

    void add(std::size_t i, std::size_t j, T delta) {
        data_[i * dim_ + j] += delta;
        if (i != j) data_[j * dim_ + i] += delta;
    }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    T trace() const {
        T t{};
        for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : data_) m = std::max(m, std::abs(static_cast<double>(x)));
        return m;
    }

    template <class U>
    SymMatrix<U> cast() const {
        SymMatrix<U> out(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i; j < dim_; ++j) out.set(i, j, static_cast<U>((*this)(i, j)));
        return out;
    }

    /// S M S with S = diag(signs).
    SymMatrix conjugated(std::span<const Sign> signs) const {
        if (signs.size() != dim_) throw Error(ErrorKind::LengthMismatch, "sign vector length");
        SymMatrix out(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i; j < dim_; ++j)
                out.set(i, j, static_cast<T>(to_int(signs[i]) * to_int(signs[j])) * (*this)(i, j));
        return out;
    }

    Vector multiply(std::span<const double> x) const {
        check_length(x.size());
        Vector y(dim_, 0.0);
        for (std::size_t i = 0; i < dim_; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < dim_; ++j) acc += static_cast<double>((*this)(i, j)) * x[j];
            y[i] = acc;
        }
        return y;
    }

    // x^T M x
    double quadratic_form(std::span<const double> x) const {
        const auto y = multiply(x);
        double acc = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) acc += x[i] * y[i];
        return acc;
    }

    friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
        if (a.dim_ != b.dim_) throw Error(ErrorKind::LengthMismatch, "dimension mismatch");
        SymMatrix out(a.dim_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
        return out;
    }

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    void check_length(std::size_t n) const {
        if (n != dim_)
            throw Error(ErrorKind::LengthMismatch,
                        "vector length " + std::to_string(n) + " vs dim " + std::to_string(dim_));
    }

    std::size_t dim_ = 0;
    std::vector<T> data_;
};

inline std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x); // no "-0"
    return buf;
}

/// Plain-text dump: `dim` on the first line, then dim rows of
/// space-separated values with 17 significant digits.
template <class T>
void dump_matrix(std::ostream& out, const SymMatrix<T>& m) {
    out << m.dim() << '\n';
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) out << ' ';
            out << format_g17(static_cast<double>(m(i, j)));
        }
        out << '\n';
    }
}

} // namespace sgspec
