#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kummer/exactalg/int_matrix.hpp"

namespace kummer {

/// U * M * V == D with U, V unimodular and D diagonal, d1 | d2 | ... , zeros last.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    /// Diagonal of D (length min(rows, cols)), non-negative.
    std::vector<std::int64_t> divisors() const;
    /// Number of non-zero divisors.
    std::size_t rank() const;
    /// Product of the non-zero divisors (1 for the zero matrix).
    std::int64_t nonzero_product() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form: Q * M == H, Q unimodular, H in reduced row
/// echelon shape over the integers (positive pivots, entries above a pivot in
/// [0, pivot)), zero rows last. Unique for the row lattice of M.
struct HermiteDecomposition {
    IntMatrix H;
    IntMatrix Q;
    std::size_t rank = 0;

    /// The non-zero rows of H.
    IntMatrix basis() const { return H.row_block(0, rank); }
};

HermiteDecomposition hermite_normal_form(const IntMatrix& m);

/// Basis (as columns) of the saturated lattice {x in Z^n : M x = 0}, in the
/// canonical column form obtained from the row HNF of its transpose.
IntMatrix integer_kernel(const IntMatrix& m);

/// Saturation of the lattice spanned by the columns of `basis`, canonical columns.
IntMatrix saturate_columns(const IntMatrix& basis);

/// Canonical column basis of the lattice spanned by the given columns.
IntMatrix canonical_column_basis(const IntMatrix& basis);

} // namespace kummer
