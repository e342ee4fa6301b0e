#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kummer/groupcore/integral_action.hpp"
#include "kummer/toruslat/subtorus.hpp"

namespace kummer {

/// Fixed locus of a subgroup (or a single element) on A^r.
struct FixLocus {
    std::vector<AffineSubtorus> components;  // sorted, pairwise distinct
    std::size_t lattice_rank = 0;            // common rank of every component
};

/// Stacked rows I - rho(h) over the given elements.
IntMatrix stacked_fixing_matrix(const IntegralAction& action, std::span<const std::size_t> elements);

/// Components of Fix(H) on one real torus factor (R/Z)^r.
std::vector<TorusCoset> fix_locus_torus(const IntegralAction& action, const Subgroup& h);
FixLocus fix_locus(const IntegralAction& action, const Subgroup& h);
FixLocus fix_locus(const IntegralAction& action, std::size_t element);

/// (product of non-zero Smith divisors of I - rho(g))^{2d}.
std::int64_t component_count(const IntegralAction& action, std::size_t element);
/// |det(I - rho(g))|^{2d}; throws NotIsolated when the determinant vanishes.
std::int64_t isolated_count(const IntegralAction& action, std::size_t element);

/// {g : S lies in Fix(g)}.
Subgroup generic_isotropy(const IntegralAction& action, const AffineSubtorus& s);

/// Per element g: #{x in (Z/N)^r : (I - rho(g)) x = 0 mod N}^{2d}, by direct
/// enumeration. Throws EnumerationTooLarge when N^r exceeds `budget`.
std::vector<std::int64_t> torsion_oracle(const IntegralAction& action, std::int64_t n,
                                         std::int64_t budget = 10'000'000);

/// (1/|G|) sum over commuting pairs of chi(Fix(g) & Fix(h)).
std::int64_t orbifold_euler(const IntegralAction& action);

} // namespace kummer
