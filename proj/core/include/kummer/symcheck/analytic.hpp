#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "kummer/exactalg/cyclotomic.hpp"
#include "kummer/groupcore/integral_action.hpp"

namespace kummer {

/// Eigenvalue exponents of the analytic representation on the tangent space,
/// one multiset per conjugacy class. The action on H^1 is this plus its conjugate.
class AnalyticEigenData {
public:
    /// Throws ShapeMismatch on size disagreement, InvalidInput when the
    /// identity class carries a non-zero exponent or the class count is wrong.
    AnalyticEigenData(std::shared_ptr<const FiniteGroup> group, std::vector<ExponentMultiset> per_class,
                      std::string label = {});

    /// rho tensor C^d: the exponents of rho repeated d times.
    static AnalyticEigenData from_integral(const IntegralAction& action);
    /// SL(2,3) with order-dependent exponents on a 4-dimensional torus.
    static AnalyticEigenData binary_tetrahedral();
    /// Every class gets the exponents listed for its element order.
    static AnalyticEigenData by_element_order(const AbstractGroup& group,
                                              const std::vector<std::pair<std::size_t, ExponentMultiset>>& table);

    const FiniteGroup& group() const noexcept { return *group_; }
    const std::shared_ptr<const FiniteGroup>& shared_group() const noexcept { return group_; }
    const std::string& label() const noexcept { return label_; }
    /// Complex dimension of the torus.
    std::size_t dimension() const noexcept { return per_class_.front().size(); }
    const ExponentMultiset& at_class(std::size_t c) const { return per_class_.at(c); }
    const std::vector<ExponentMultiset>& classes() const noexcept { return per_class_; }

private:
    std::shared_ptr<const FiniteGroup> group_;
    std::vector<ExponentMultiset> per_class_;
    std::string label_;
};

/// Fixed-point data of one class: a finite count or a positive dimension.
struct LefschetzCount {
    bool isolated = true;
    std::int64_t count = 0;       // when isolated
    std::size_t dimension = 0;    // complex dimension otherwise
    friend bool operator==(const LefschetzCount&, const LefschetzCount&) = default;
};

/// |det(1 - eta(g))|^2 as a product of Phi_k(1) over the doubled multiset.
/// Throws ShapeMismatch when the doubled multiset is not Galois-closed.
LefschetzCount lefschetz_count(const AnalyticEigenData& data, std::size_t class_index);

/// Phi_k(1): p when k is a power of the prime p, 0 for k = 1, else 1.
std::int64_t cyclotomic_at_one(unsigned k);

} // namespace kummer
