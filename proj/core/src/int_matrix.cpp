#include "kummer/exactalg/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "kummer/error.hpp"
#include "kummer/exactalg/checked.hpp"

namespace kummer {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorCode::InvalidInput, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    IntMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (const auto& r : rows) {
        if (r.size() != m.cols_) throw Error(ErrorCode::InvalidInput, "ragged matrix rows");
        m.data_.insert(m.data_.end(), r.begin(), r.end());
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<std::int64_t>>& cols,
                                  std::size_t height) {
    IntMatrix m(height, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != height) throw Error(ErrorCode::InvalidInput, "ragged matrix columns");
        for (std::size_t i = 0; i < height; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

std::vector<std::int64_t> IntMatrix::column(std::size_t j) const {
    std::vector<std::int64_t> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
    IntMatrix out(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
    return out;
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const {
    IntMatrix out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
    return out;
}

IntMatrix IntMatrix::vstack(const IntMatrix& below) const {
    if (rows_ == 0) return below;
    if (below.rows_ == 0) return *this;
    if (below.cols_ != cols_) throw Error(ErrorCode::InvalidInput, "vstack column mismatch");
    IntMatrix out = *this;
    out.rows_ += below.rows_;
    out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
    return out;
}

std::int64_t IntMatrix::trace() const {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = checked_add(t, (*this)(i, i));
    return t;
}

std::int64_t IntMatrix::determinant() const {
    if (!is_square()) throw Error(ErrorCode::InvalidInput, "determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const std::int64_t num =
                    checked_sub(checked_mul(a(i, j), a(k, k)), checked_mul(a(i, k), a(k, j)));
                a(i, j) = num / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return checked_mul(sign, a(n - 1, n - 1));
}

bool IntMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ',';
            os << (*this)(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, std::int64_t factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(target, j) = checked_add((*this)(target, j), checked_mul(factor, (*this)(source, j)));
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, std::int64_t factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, target) = checked_add((*this)(i, target), checked_mul(factor, (*this)(i, source)));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = checked_sub(0, (*this)(i, j));
}

std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                                  b.data_.end());
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidInput, "matrix product shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::int64_t aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
        }
    return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::InvalidInput, "matrix sum shape mismatch");
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = checked_add(a(i, j), b(i, j));
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::InvalidInput, "matrix difference shape mismatch");
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = checked_sub(a(i, j), b(i, j));
    return out;
}

std::vector<std::int64_t> multiply(const IntMatrix& m, std::span<const std::int64_t> v) {
    std::vector<std::int64_t> out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i] = checked_add(out[i], checked_mul(m(i, j), v[j]));
    return out;
}

std::vector<Rational> multiply(const IntMatrix& m, std::span<const Rational> v) {
    std::vector<Rational> out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out[i] += Rational(m(i, j)) * v[j];
    return out;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::NonInvertible, "non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
        a[i][n + i] = Rational(1);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].numerator() == 0) ++p;
        if (p == n) throw Error(ErrorCode::NonInvertible, "singular matrix " + m.to_string());
        std::swap(a[p], a[c]);
        const Rational piv = a[c][c];
        for (auto& x : a[c]) x /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].numerator() == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_integer(a[i][n + j]))
                throw Error(ErrorCode::NonInvertible, "matrix not invertible over the integers: " +
                                                          m.to_string());
            inv(i, j) = a[i][n + j].numerator();
        }
    return inv;
}

} // namespace kummer
