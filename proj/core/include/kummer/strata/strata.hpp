#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kummer/exactalg/int_matrix.hpp"
#include "kummer/exactalg/polynomial.hpp"
#include "kummer/groupcore/integral_action.hpp"
#include "kummer/groupcore/subgroup_poset.hpp"
#include "kummer/mckay/fiber.hpp"
#include "kummer/toruslat/subtorus.hpp"

namespace kummer {

/// One G-orbit of components of fixed loci sharing a generic isotropy H.
struct Stratum {
    std::size_t isotropy_class = 0;        // index into the subgroup class poset
    Subgroup isotropy;                     // generic isotropy H of the representative
    AffineSubtorus representative;         // A_K
    std::size_t orbit_size = 0;            // components in the orbit under G
    Subgroup stabilizer;                   // setwise stabilizer of A_K; contains H, lies in N(H)
    QuotientGroup weyl;                    // W_K = stabilizer / H
    std::vector<IntMatrix> eta;            // eta[w]: action of W_K element w on the lattice of A_K (Hermite basis)
    FiberPolynomial fiber;                 // W_K-equivariant
    std::vector<AffineSubtorus> deeper;    // maximal sub-loci with strictly larger isotropy

    IntPolynomial closure_quotient;        // Poincare polynomial of A_K / W_K
    IntPolynomial open_virtual;            // virtual polynomial of the open stratum in Y
    IntPolynomial open_weighted;           // same, weighted by the fiber (contribution to X)

    std::size_t lattice_rank() const { return representative.lattice_rank(); }
    std::size_t dimension() const { return representative.complex_dimension(); }
};

/// Strata sharing an isotropy class, summed.
struct IsotropyClassSummary {
    std::size_t isotropy_class = 0;
    std::size_t isotropy_order = 0;
    std::size_t dimension = 0;
    std::size_t components_upstairs = 0;   // components of Fix with generic isotropy in the class
    std::size_t components_downstairs = 0; // strata (components of Y([H]))
    std::size_t weyl_order = 0;
    IntPolynomial fiber;
    IntPolynomial open_virtual;
    IntPolynomial open_weighted;
    std::vector<std::size_t> strata;
};

struct StrataReport {
    std::vector<Stratum> strata;           // by decreasing dimension, then isotropy class
    std::vector<IsotropyClassSummary> classes;
    /// (i, j): some component of stratum i lies in the closure of the representative of stratum j.
    std::vector<std::pair<std::size_t, std::size_t>> closure_edges;
    IntPolynomial quotient;                // sum of open_virtual
    IntPolynomial resolution;              // sum of open_weighted
    IntPolynomial resolution_frobenius;    // the same via a sum over every component with full stabilizers
    std::size_t flat_count = 0;            // components of all fixed loci, over all isotropies
};

/// Isotropy stratification with all polynomials. Throws NonIntegerAge when a
/// transversal group is not Gorenstein.
StrataReport stratify(const IntegralAction& action);

inline const IntPolynomial& stratum_closure_quotient_poincare(const Stratum& s) { return s.closure_quotient; }
inline const IntPolynomial& open_stratum_virtual(const Stratum& s) { return s.open_virtual; }
inline const IntPolynomial& open_stratum_weighted(const Stratum& s) { return s.open_weighted; }

/// Sum over strata of the fiber-weighted open-stratum polynomials.
IntPolynomial assemble_resolution_poincare(const IntegralAction& action);

/// Matrix of g on the column lattice B (g B = B X); B must be saturated and g-stable.
IntMatrix induced_lattice_action(const IntMatrix& g, const IntMatrix& basis);

} // namespace kummer
