#pragma once

#include "pptor/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pptor {

using IntVector = std::vector<Int>;

/// Dense row-major integer matrix. Zero-sized dimensions are allowed and
/// carry their shape (a 0x3 matrix still has 3 columns).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix diagonal(std::span<const Int> diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Int> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    IntVector row_vector(std::size_t r) const;
    IntVector column_vector(std::size_t c) const;

    void append_row(std::span<const Int> values);
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    IntMatrix transpose() const;
    /// Rows [first, first+count) as a new matrix.
    IntMatrix row_block(std::size_t first, std::size_t count) const;
    /// Columns [first, first+count) as a new matrix.
    IntMatrix col_block(std::size_t first, std::size_t count) const;
    bool is_zero() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// Row vector times matrix.
IntVector multiply(std::span<const Int> v, const IntMatrix& m);

/// Vertical concatenation; column counts must agree.
IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom);
/// Horizontal concatenation; row counts must agree.
IntMatrix concat(const IntMatrix& left, const IntMatrix& right);

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

}  // namespace pptor
