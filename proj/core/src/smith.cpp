#include "kummer/exactalg/smith.hpp"

#include <cstdlib>
#include <utility>

#include "kummer/exactalg/checked.hpp"

namespace kummer {

namespace {

std::int64_t abs64(std::int64_t x) {
    if (x == INT64_MIN) throw Error(ErrorCode::Overflow, "abs of INT64_MIN");
    return x < 0 ? -x : x;
}

// Row operations are mirrored into `left`, column operations into `right`.
struct Reducer {
    IntMatrix a;
    IntMatrix left;
    IntMatrix right;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        a.swap_rows(i, j);
        left.swap_rows(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        a.swap_cols(i, j);
        right.swap_cols(i, j);
    }
    void add_row(std::size_t target, std::size_t source, std::int64_t f) {
        if (f == 0) return;
        a.add_row_multiple(target, source, f);
        left.add_row_multiple(target, source, f);
    }
    void add_col(std::size_t target, std::size_t source, std::int64_t f) {
        if (f == 0) return;
        a.add_col_multiple(target, source, f);
        right.add_col_multiple(target, source, f);
    }
    void negate_row(std::size_t i) {
        a.negate_row(i);
        left.negate_row(i);
    }
};

} // namespace

std::vector<std::int64_t> SmithDecomposition::divisors() const {
    const std::size_t n = std::min(D.rows(), D.cols());
    std::vector<std::int64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = D(i, i);
    return out;
}

std::size_t SmithDecomposition::rank() const {
    std::size_t k = 0;
    for (auto d : divisors())
        if (d != 0) ++k;
    return k;
}

std::int64_t SmithDecomposition::nonzero_product() const {
    std::int64_t p = 1;
    for (auto d : divisors())
        if (d != 0) p = checked_mul(p, d);
    return p;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Reducer r{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    const std::size_t n = std::min(rows, cols);

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Smallest non-zero entry of the trailing block becomes the pivot.
            std::size_t pi = rows, pj = cols;
            std::int64_t best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    const std::int64_t v = abs64(r.a(i, j));
                    if (v != 0 && (best == 0 || v < best)) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) goto done;
            r.swap_rows(t, pi);
            r.swap_cols(t, pj);

            bool clean = true;
            const std::int64_t p = r.a(t, t);
            for (std::size_t i = t + 1; i < rows; ++i) {
                r.add_row(i, t, -floor_div(r.a(i, t), p));
                if (r.a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                r.add_col(j, t, -floor_div(r.a(t, j), p));
                if (r.a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold an offending row into the pivot row and retry.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (r.a(i, j) % p != 0) {
                        r.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (r.a(t, t) < 0) r.negate_row(t);
    }
done:
    return {std::move(r.left), std::move(r.a), std::move(r.right)};
}

HermiteDecomposition hermite_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Reducer r{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t j = 0; j < cols && pivot_row < rows; ++j) {
        // Euclid down column j below pivot_row.
        for (;;) {
            std::size_t best_i = rows;
            std::int64_t best = 0;
            for (std::size_t i = pivot_row; i < rows; ++i) {
                const std::int64_t v = abs64(r.a(i, j));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    best_i = i;
                }
            }
            if (best == 0) break;
            r.swap_rows(pivot_row, best_i);
            bool clean = true;
            for (std::size_t i = pivot_row + 1; i < rows; ++i) {
                r.add_row(i, pivot_row, -floor_div(r.a(i, j), r.a(pivot_row, j)));
                if (r.a(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (r.a(pivot_row, j) == 0) continue;
        if (r.a(pivot_row, j) < 0) r.negate_row(pivot_row);
        const std::int64_t p = r.a(pivot_row, j);
        for (std::size_t i = 0; i < pivot_row; ++i) r.add_row(i, pivot_row, -floor_div(r.a(i, j), p));
        pivot_cols.push_back(j);
        ++pivot_row;
    }
    return {std::move(r.a), std::move(r.left), pivot_row};
}

IntMatrix canonical_column_basis(const IntMatrix& basis) {
    if (basis.cols() == 0) return IntMatrix(basis.rows(), 0);
    const auto h = hermite_normal_form(basis.transpose());
    return h.basis().transpose();
}

IntMatrix integer_kernel(const IntMatrix& m) {
    const auto snf = smith_normal_form(m);
    const std::size_t k = snf.rank();
    const std::size_t n = m.cols();
    if (k == n) return IntMatrix(n, 0);
    return canonical_column_basis(snf.V.column_block(k, n - k));
}

IntMatrix saturate_columns(const IntMatrix& basis) {
    // The saturation is the kernel of the annihilator of the span.
    if (basis.cols() == 0) return IntMatrix(basis.rows(), 0);
    const IntMatrix annihilator_rows = integer_kernel(basis.transpose()).transpose();
    if (annihilator_rows.rows() == 0) return IntMatrix::identity(basis.rows());
    return integer_kernel(annihilator_rows);
}

} // namespace kummer
