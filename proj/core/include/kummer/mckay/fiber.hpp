#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kummer/exactalg/polynomial.hpp"
#include "kummer/exactalg/rational.hpp"
#include "kummer/groupcore/integral_action.hpp"
#include "kummer/groupcore/subgroup_poset.hpp"
#include "kummer/repring/class_function.hpp"

namespace kummer {

/// Cohomology of the exceptional fiber over a point with isotropy H: one class
/// in degree 2 age(c) per conjugacy class c of H.
struct FiberPolynomial {
    IntPolynomial plain;
    /// Over the Weyl group; coefficient at t^{2a} is the permutation
    /// character of W on the age-a classes of H.
    std::optional<EquivariantPolynomial> equivariant;
};

/// d * (sum of eigenvalue exponents of rho(g)).
Rational element_age(const IntegralAction& action, std::size_t element);

/// Integer age, or NonIntegerAge.
unsigned integral_age(const IntegralAction& action, std::size_t element);

/// Sum over conjugacy classes of H of t^{2 age}.
FiberPolynomial fiber_poincare(const IntegralAction& action, const Subgroup& h);

/// Adds the W-equivariant structure for W = N/H acting on the classes of H.
/// Throws NotNormalizer, NonIntegerAge.
FiberPolynomial fiber_poincare_equivariant(const IntegralAction& action, const Subgroup& h, const Subgroup& n);

/// Sum of t^{2 age(c)} over the classes c of H fixed by conjugation with
/// `element` (an element normalizing H).
IntPolynomial fiber_trace(const IntegralAction& action, const WeylClassAction& classes, std::size_t element);

/// "m + n e" for a Weyl group of order 2 with sign character e; otherwise the
/// per-class values. Coefficients are printed ascending in t.
std::string describe_equivariant(const EquivariantPolynomial& p);

} // namespace kummer
