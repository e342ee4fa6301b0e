#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kummer/exactalg/int_matrix.hpp"
#include "kummer/exactalg/rational.hpp"

namespace kummer {

/// Connected closed subgroup coset of the real torus (R/Z)^r, written as
/// {x : P x = c mod 1} with P the row-Hermite basis of the annihilator of a
/// saturated lattice and c in [0, 1)^p. The pair (P, c) is canonical.
class TorusCoset {
public:
    TorusCoset() = default;
    static TorusCoset whole(std::size_t r);
    /// Coset through `point` with the given annihilator rows (any basis of a
    /// saturated annihilator lattice).
    static TorusCoset through(const IntMatrix& annihilator, std::span<const Rational> point);
    /// Connected components of {x : M x = rhs mod 1}, sorted; empty when inconsistent.
    static std::vector<TorusCoset> solve(const IntMatrix& m, std::span<const Rational> rhs);

    std::size_t ambient_rank() const noexcept { return lattice_.rows(); }
    /// Rank of the lattice (real dimension of the coset).
    std::size_t rank() const noexcept { return lattice_.cols(); }
    const IntMatrix& annihilator() const noexcept { return annihilator_; }
    std::span<const Rational> offset() const noexcept { return offset_; }
    /// Canonical column basis of the saturated lattice.
    const IntMatrix& lattice() const noexcept { return lattice_; }
    /// A canonical point of the coset.
    std::span<const Rational> point() const noexcept { return point_; }

    bool contains(const TorusCoset& smaller) const;
    bool contains_point(std::span<const Rational> x) const;
    std::vector<TorusCoset> intersect(const TorusCoset& other) const;
    /// Image under x -> g x.
    TorusCoset act(const IntMatrix& g, const IntMatrix& g_inverse) const;
    bool fixed_pointwise_by(const IntMatrix& g) const;

    std::string to_string() const;

    friend bool operator==(const TorusCoset& a, const TorusCoset& b) {
        return a.annihilator_ == b.annihilator_ && a.offset_ == b.offset_;
    }
    friend std::strong_ordering operator<=>(const TorusCoset& a, const TorusCoset& b);

private:
    IntMatrix annihilator_;
    std::vector<Rational> offset_;
    IntMatrix lattice_;
    std::vector<Rational> point_;
};

/// Connected component of a fixed locus in A^r = T^{2d}: 2d torus cosets
/// sharing one lattice. The translate is the r x 2d matrix of their points.
class AffineSubtorus {
public:
    AffineSubtorus() = default;
    explicit AffineSubtorus(std::vector<TorusCoset> factors);
    static AffineSubtorus whole(std::size_t r, unsigned d);

    std::size_t ambient_rank() const { return factors_.front().ambient_rank(); }
    unsigned d() const { return static_cast<unsigned>(factors_.size() / 2); }
    std::size_t lattice_rank() const { return factors_.front().rank(); }
    std::size_t complex_dimension() const { return d() * lattice_rank(); }
    const IntMatrix& lattice() const { return factors_.front().lattice(); }
    const std::vector<TorusCoset>& factors() const noexcept { return factors_; }
    /// Column j is the canonical point of factor j.
    std::vector<std::vector<Rational>> translate() const;

    bool contains(const AffineSubtorus& smaller) const;
    std::vector<AffineSubtorus> intersect(const AffineSubtorus& other) const;
    AffineSubtorus act(const IntMatrix& g, const IntMatrix& g_inverse) const;
    bool fixed_pointwise_by(const IntMatrix& g) const;

    std::string to_string() const;

    friend bool operator==(const AffineSubtorus&, const AffineSubtorus&) = default;
    friend auto operator<=>(const AffineSubtorus& a, const AffineSubtorus& b) { return a.factors_ <=> b.factors_; }

private:
    std::vector<TorusCoset> factors_;
};

/// All 2d-tuples drawn from `factors` (the components of one fixed locus on T).
std::vector<AffineSubtorus> product_components(const std::vector<TorusCoset>& factors, unsigned d);

} // namespace kummer
