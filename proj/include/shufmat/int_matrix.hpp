#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "shufmat/permutation.hpp"

namespace shufmat {

/// Dense integer matrix, row-major. All the elementary-matrix and Kronecker
/// algebra is done over exact integers so identities can be asserted with
/// plain equality.
class IntMatrix {
public:
    IntMatrix(std::int64_t rows, std::int64_t cols) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
        a_.assign(static_cast<std::size_t>(rows * cols), 0);
    }

    static IntMatrix identity(std::int64_t n) {
        IntMatrix m(n, n);
        for (std::int64_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    std::int64_t operator()(std::int64_t i, std::int64_t j) const {
        return a_[static_cast<std::size_t>(i * cols_ + j)];
    }
    std::int64_t& operator()(std::int64_t i, std::int64_t j) {
        return a_[static_cast<std::size_t>(i * cols_ + j)];
    }

    bool operator==(const IntMatrix&) const = default;

private:
    std::int64_t rows_, cols_;
    std::vector<std::int64_t> a_;
};

/// E^{i,j}: single 1 at row i, column j. Indices are 1-based, as customary
/// for elementary matrices; everything else in this library is 0-based.
inline IntMatrix elementary(std::int64_t i, std::int64_t j, std::int64_t rows, std::int64_t cols) {
    if (i < 1 || i > rows || j < 1 || j > cols)
        throw std::out_of_range("elementary index (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    IntMatrix m(rows, cols);
    m(i - 1, j - 1) = 1;
    return m;
}

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul shape mismatch: " + std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()));
    IntMatrix out(a.rows(), b.cols());
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t k = 0; k < a.cols(); ++k) {
            const auto aik = a(i, k);
            if (aik == 0) continue;
            for (std::int64_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return matmul(a, b); }

inline IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix addition shape mismatch");
    IntMatrix out(a.rows(), a.cols());
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

/// Kronecker product: block grid a(i,j) * B of shape (mp x nq).
inline IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t j = 0; j < a.cols(); ++j) {
            const auto aij = a(i, j);
            if (aij == 0) continue;
            for (std::int64_t h = 0; h < b.rows(); ++h)
                for (std::int64_t k = 0; k < b.cols(); ++k)
                    out(i * b.rows() + h, j * b.cols() + k) = aij * b(h, k);
        }
    return out;
}

inline IntMatrix transpose(const IntMatrix& a) {
    IntMatrix out(a.cols(), a.rows());
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

/// Permutation matrix with P e_x = e_{f(x)}, i.e. entry (f(x), x) = 1.
inline IntMatrix perm_to_matrix(const Permutation& f) {
    IntMatrix p(f.degree(), f.degree());
    for (std::int64_t x = 0; x < f.degree(); ++x) p(f(x), x) = 1;
    return p;
}

} // namespace shufmat
