#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "kummer/exactalg/rational.hpp"

namespace kummer {

/// Dense row-major integer matrix with overflow-checked arithmetic.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0);
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
    /// Columns given as vectors of equal length.
    static IntMatrix from_columns(const std::vector<std::vector<std::int64_t>>& cols, std::size_t height);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const std::int64_t> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    std::vector<std::int64_t> column(std::size_t j) const;
    std::span<const std::int64_t> data() const noexcept { return data_; }

    IntMatrix transpose() const;
    /// Rows [first, first+count).
    IntMatrix row_block(std::size_t first, std::size_t count) const;
    /// Columns [first, first+count).
    IntMatrix column_block(std::size_t first, std::size_t count) const;
    /// Stacks `below` under this matrix; column counts must agree.
    IntMatrix vstack(const IntMatrix& below) const;

    std::int64_t trace() const;
    /// Exact determinant (fraction-free Bareiss elimination).
    std::int64_t determinant() const;
    bool is_identity() const;

    std::vector<std::vector<std::int64_t>> to_rows() const;
    std::string to_string() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[target] += factor * row[source]
    void add_row_multiple(std::size_t target, std::size_t source, std::int64_t factor);
    void add_col_multiple(std::size_t target, std::size_t source, std::int64_t factor);
    void negate_row(std::size_t i);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

std::vector<std::int64_t> multiply(const IntMatrix& m, std::span<const std::int64_t> v);
std::vector<Rational> multiply(const IntMatrix& m, std::span<const Rational> v);

/// Inverse of a unimodular matrix (determinant +-1); throws NonInvertible otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

} // namespace kummer
