#pragma once

#include <span>

#include "kummer/exactalg/int_matrix.hpp"
#include "kummer/exactalg/polynomial.hpp"
#include "kummer/groupcore/integral_action.hpp"
#include "kummer/repring/class_function.hpp"

namespace kummer {

/// Class [g] carries det(I + t rho(g))^{2d}: the graded character of the
/// cohomology of A^r.
EquivariantPolynomial torus_equivariant_polynomial(const IntegralAction& action);

/// Poincare polynomial of A^r / G: (1/|G|) sum_g det(I + t rho(g))^{2d}.
IntPolynomial quotient_poincare(const IntegralAction& action);

/// Same average over an explicit list of matrices forming a group (the
/// induced action on a sublattice, possibly with repeated matrices).
IntPolynomial molien_average(std::span<const IntMatrix> matrices, unsigned d);

} // namespace kummer
