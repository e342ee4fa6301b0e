#include "kummer/symcheck/analytic.hpp"

#include <algorithm>

#include "kummer/error.hpp"
#include "kummer/exactalg/checked.hpp"
#include "kummer/groupcore/catalog.hpp"

namespace kummer {

AnalyticEigenData::AnalyticEigenData(std::shared_ptr<const FiniteGroup> group, std::vector<ExponentMultiset> per_class,
                                     std::string label)
    : group_(std::move(group)), per_class_(std::move(per_class)), label_(std::move(label)) {
    if (per_class_.size() != group_->conjugacy_classes().size())
        throw Error(ErrorCode::InvalidInput, "expected exponents for " +
                                                 std::to_string(group_->conjugacy_classes().size()) +
                                                 " classes, got " + std::to_string(per_class_.size()));
    for (const auto& e : per_class_)
        if (e.size() != per_class_.front().size())
            throw Error(ErrorCode::ShapeMismatch, "exponent lists differ in length");
    const auto identity_class = group_->class_of(group_->identity());
    if (per_class_[identity_class].zero_count() != per_class_[identity_class].size())
        throw Error(ErrorCode::InvalidInput, "identity must act with all exponents zero");
}

AnalyticEigenData AnalyticEigenData::from_integral(const IntegralAction& action) {
    std::vector<ExponentMultiset> per_class;
    for (const auto& cls : action.group().conjugacy_classes())
        per_class.push_back(exponent_multiset(action.matrix(cls.front())).repeated(action.d()));
    return AnalyticEigenData(action.shared_group(), std::move(per_class), action.label());
}

AnalyticEigenData AnalyticEigenData::by_element_order(
    const AbstractGroup& group, const std::vector<std::pair<std::size_t, ExponentMultiset>>& table) {
    const auto& g = group.group();
    std::vector<ExponentMultiset> per_class;
    for (const auto& cls : g.conjugacy_classes()) {
        const auto order = g.element_order(cls.front());
        const auto it = std::find_if(table.begin(), table.end(), [&](const auto& row) { return row.first == order; });
        if (it == table.end())
            throw Error(ErrorCode::InvalidInput, "no exponents given for elements of order " + std::to_string(order));
        per_class.push_back(it->second);
    }
    return AnalyticEigenData(group.shared_group(), std::move(per_class), group.label());
}

AnalyticEigenData AnalyticEigenData::binary_tetrahedral() {
    auto q = [](std::int64_t n, std::int64_t d) { return Rational(n, d); };
    const std::vector<std::pair<std::size_t, ExponentMultiset>> table = {
        {1, ExponentMultiset({q(0, 1), q(0, 1), q(0, 1), q(0, 1)})},
        {2, ExponentMultiset({q(1, 2), q(1, 2), q(1, 2), q(1, 2)})},
        {3, ExponentMultiset({q(0, 1), q(0, 1), q(1, 3), q(2, 3)})},
        {4, ExponentMultiset({q(1, 4), q(3, 4), q(1, 4), q(3, 4)})},
        {6, ExponentMultiset({q(1, 6), q(1, 2), q(1, 2), q(5, 6)})},
    };
    return by_element_order(kummer::binary_tetrahedral(), table);
}

std::int64_t cyclotomic_at_one(unsigned k) {
    if (k == 0) throw Error(ErrorCode::InvalidInput, "cyclotomic index must be positive");
    if (k == 1) return 0;
    for (unsigned p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        while (k % p == 0) k /= p;
        return k == 1 ? p : 1;
    }
    return k;  // prime
}

LefschetzCount lefschetz_count(const AnalyticEigenData& data, std::size_t class_index) {
    const auto& e = data.at_class(class_index);
    if (e.zero_count() > 0) return {false, 0, e.zero_count()};
    const ExponentMultiset doubled = e + e.conjugate();
    std::int64_t count = 1;
    for (const auto& f : doubled.factors())
        count = checked_mul(count, checked_pow(cyclotomic_at_one(f.order), f.multiplicity));
    return {true, count, 0};
}

} // namespace kummer
