#include "kummer/repring/molien.hpp"

#include "kummer/error.hpp"
#include "kummer/exactalg/cyclotomic.hpp"

namespace kummer {

EquivariantPolynomial torus_equivariant_polynomial(const IntegralAction& action) {
    const unsigned power = 2 * action.d();
    return EquivariantPolynomial::from_elements(action.shared_group(), [&](std::size_t g) {
        return det_one_plus_t(action.matrix(g)).pow(power);
    });
}

IntPolynomial quotient_poincare(const IntegralAction& action) {
    return mu0(torus_equivariant_polynomial(action));
}

IntPolynomial molien_average(std::span<const IntMatrix> matrices, unsigned d) {
    if (matrices.empty()) throw Error(ErrorCode::InvalidInput, "empty matrix group");
    IntPolynomial total;
    for (const auto& m : matrices) total += det_one_plus_t(m).pow(2 * d);
    return total.divide_exact(static_cast<std::int64_t>(matrices.size()));
}

} // namespace kummer
