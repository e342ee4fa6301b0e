#include "kummer/toruslat/fixed_locus.hpp"

#include <algorithm>

#include "kummer/error.hpp"
#include "kummer/exactalg/checked.hpp"
#include "kummer/exactalg/smith.hpp"

namespace kummer {

IntMatrix stacked_fixing_matrix(const IntegralAction& action, std::span<const std::size_t> elements) {
    const std::size_t r = action.rank();
    IntMatrix out(0, r);
    const IntMatrix id = IntMatrix::identity(r);
    for (auto e : elements) out = out.vstack(id - action.matrix(e));
    return out;
}

std::vector<TorusCoset> fix_locus_torus(const IntegralAction& action, const Subgroup& h) {
    const auto gens = action.group().generating_set(h);
    const IntMatrix m = stacked_fixing_matrix(action, gens);
    const std::vector<Rational> zero(m.rows(), Rational(0));
    return TorusCoset::solve(m, zero);
}

FixLocus fix_locus(const IntegralAction& action, const Subgroup& h) {
    const auto factors = fix_locus_torus(action, h);
    FixLocus out;
    out.components = product_components(factors, action.d());
    out.lattice_rank = factors.front().rank();
    return out;
}

FixLocus fix_locus(const IntegralAction& action, std::size_t element) {
    const std::size_t gen[1] = {element};
    return fix_locus(action, action.group().closure(gen));
}

std::int64_t component_count(const IntegralAction& action, std::size_t element) {
    const IntMatrix m = IntMatrix::identity(action.rank()) - action.matrix(element);
    return checked_pow(smith_normal_form(m).nonzero_product(), 2 * action.d());
}

std::int64_t isolated_count(const IntegralAction& action, std::size_t element) {
    const IntMatrix m = IntMatrix::identity(action.rank()) - action.matrix(element);
    const std::int64_t det = m.determinant();
    if (det == 0)
        throw Error(ErrorCode::NotIsolated, "I - rho(g) is singular for g = " + action.matrix(element).to_string());
    return checked_pow(det < 0 ? -det : det, 2 * action.d());
}

Subgroup generic_isotropy(const IntegralAction& action, const AffineSubtorus& s) {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < action.order(); ++g)
        if (s.fixed_pointwise_by(action.matrix(g))) out.push_back(g);
    return Subgroup(std::move(out), action.order());
}

std::vector<std::int64_t> torsion_oracle(const IntegralAction& action, std::int64_t n, std::int64_t budget) {
    if (n < 1) throw Error(ErrorCode::InvalidInput, "torsion level must be at least 1");
    const std::size_t r = action.rank();
    std::int64_t points = 1;
    for (std::size_t i = 0; i < r; ++i) {
        if (points > budget / n)
            throw Error(ErrorCode::EnumerationTooLarge,
                        std::to_string(n) + "^" + std::to_string(r) + " points exceed the enumeration budget");
        points *= n;
    }
    std::vector<std::int64_t> out;
    out.reserve(action.order());
    std::vector<std::int64_t> x(r);
    for (std::size_t g = 0; g < action.order(); ++g) {
        const IntMatrix m = IntMatrix::identity(r) - action.matrix(g);
        std::int64_t count = 0;
        std::fill(x.begin(), x.end(), 0);
        for (std::int64_t p = 0; p < points; ++p) {
            bool zero = true;
            for (std::size_t i = 0; i < r && zero; ++i) {
                std::int64_t s = 0;
                for (std::size_t j = 0; j < r; ++j) s += m(i, j) * x[j];
                zero = floor_mod(s, n) == 0;
            }
            if (zero) ++count;
            for (std::size_t i = 0; i < r; ++i) {
                if (++x[i] < n) break;
                x[i] = 0;
            }
        }
        out.push_back(checked_pow(count, 2 * action.d()));
    }
    return out;
}

std::int64_t orbifold_euler(const IntegralAction& action) {
    const auto& g = action.group();
    const std::size_t r = action.rank();
    std::int64_t total = 0;
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b) {
            if (!g.commute(a, b)) continue;
            const std::size_t pair[2] = {a, b};
            const auto snf = smith_normal_form(stacked_fixing_matrix(action, pair));
            if (snf.rank() < r) continue;  // positive-dimensional tori have Euler number 0
            total = checked_add(total, checked_pow(snf.nonzero_product(), 2 * action.d()));
        }
    const auto order = static_cast<std::int64_t>(g.order());
    if (total % order != 0) throw Error(ErrorCode::NonIntegralInvariant, "orbifold Euler sum not divisible by |G|");
    return total / order;
}

} // namespace kummer
