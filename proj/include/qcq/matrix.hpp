#pragma once

// Dense matrices over a small field with exact Gaussian elimination.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "qcq/error.hpp"
#include "qcq/field.hpp"

namespace qcq {

class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    explicit Matrix(FieldPtr field, std::size_t cols = 0) : Matrix(std::move(field), 0, cols) {}

    [[nodiscard]] const FieldPtr& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool empty() const noexcept { return rows_ == 0; }

    std::uint8_t& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    std::uint8_t operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<std::uint8_t> row(std::size_t r) noexcept { return {&data_[r * cols_], cols_}; }
    [[nodiscard]] std::span<const std::uint8_t> row(std::size_t r) const noexcept { return {&data_[r * cols_], cols_}; }

    void append_row(std::span<const std::uint8_t> v) {
        if (v.size() != cols_) throw DomainError("row length mismatch");
        data_.insert(data_.end(), v.begin(), v.end());
        ++rows_;
    }

    /// row[dst] += c * row[src]
    void axpy_row(std::size_t dst, std::uint8_t c, std::size_t src) noexcept {
        if (c == 0) return;
        const Field& f = *field_;
        const auto* m = f.mul_row(c);
        std::uint8_t* d = &data_[dst * cols_];
        const std::uint8_t* s = &data_[src * cols_];
        for (std::size_t j = 0; j < cols_; ++j) {
            if (s[j] != 0) d[j] = f.add(d[j], m[s[j]]);
        }
    }
    void scale_row(std::size_t r, std::uint8_t c) noexcept {
        const auto* m = field_->mul_row(c);
        for (auto& v : row(r)) v = m[v];
    }
    void swap_rows(std::size_t a, std::size_t b) noexcept {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
    }

    /// In-place reduced row echelon form; returns the pivot columns. Zero rows
    /// are dropped so that rows() equals the rank afterwards.
    std::vector<std::size_t> rref() {
        return rref_with_order({});
    }

    /// RREF where pivots are searched in the given column order (remaining
    /// columns are appended in natural order).
    std::vector<std::size_t> rref_with_order(std::span<const std::size_t> order) {
        std::vector<std::size_t> col_order(order.begin(), order.end());
        if (col_order.size() < cols_) {
            std::vector<bool> used(cols_, false);
            for (auto c : col_order) used[c] = true;
            for (std::size_t c = 0; c < cols_; ++c) {
                if (!used[c]) col_order.push_back(c);
            }
        }
        const Field& f = *field_;
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c : col_order) {
            if (r == rows_) break;
            std::size_t piv = r;
            while (piv < rows_ && (*this)(piv, c) == 0) ++piv;
            if (piv == rows_) continue;
            swap_rows(r, piv);
            scale_row(r, f.inv((*this)(r, c)));
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i != r && (*this)(i, c) != 0) axpy_row(i, f.neg((*this)(i, c)), r);
            }
            pivots.push_back(c);
            ++r;
        }
        rows_ = r;
        data_.resize(rows_ * cols_);
        return pivots;
    }

    [[nodiscard]] std::size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    /// Basis of {v : M v^T = 0} (Euclidean right kernel).
    [[nodiscard]] Matrix null_space() const {
        Matrix m = *this;
        const auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        const Field& f = *field_;
        Matrix out(field_, cols_);
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<std::uint8_t> v(cols_, 0);
            v[free] = 1;
            for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(m(i, free));
            out.append_row(v);
        }
        return out;
    }

private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<std::uint8_t> data_;
};

/// Hermitian inner product sum u_i v_i^q.
inline std::uint8_t hermitian_dot(const Field& f, std::span<const std::uint8_t> u, std::span<const std::uint8_t> v) {
    std::uint8_t acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc = f.add(acc, f.mul(u[i], f.conj(v[i])));
    return acc;
}

/// A * conj(B)^T == 0.
inline bool hermitian_orthogonal(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DomainError("column count mismatch");
    const Field& f = *a.field();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            if (hermitian_dot(f, a.row(i), b.row(j)) != 0) return false;
        }
    }
    return true;
}

/// Row space of a matrix with a membership test.
class RowSpace {
public:
    explicit RowSpace(Matrix m) : basis_(std::move(m)) { pivots_ = basis_.rref(); }

    [[nodiscard]] std::size_t dim() const noexcept { return pivots_.size(); }

    [[nodiscard]] bool contains(std::span<const std::uint8_t> v) const {
        if (v.size() != basis_.cols()) throw DomainError("vector length mismatch");
        const Field& f = *basis_.field();
        std::vector<std::uint8_t> r(v.begin(), v.end());
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            const std::uint8_t c = r[pivots_[i]];
            if (c == 0) continue;
            const auto* m = f.mul_row(c);
            const auto b = basis_.row(i);
            for (std::size_t j = 0; j < r.size(); ++j) {
                if (b[j] != 0) r[j] = f.sub(r[j], m[b[j]]);
            }
        }
        return std::all_of(r.begin(), r.end(), [](std::uint8_t x) { return x == 0; });
    }

private:
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace qcq
