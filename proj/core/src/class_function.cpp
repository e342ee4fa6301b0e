#include "kummer/repring/class_function.hpp"

#include "kummer/error.hpp"
#include "kummer/exactalg/checked.hpp"

namespace kummer {

ClassFunction::ClassFunction(std::shared_ptr<const FiniteGroup> group, std::vector<std::int64_t> values)
    : group_(std::move(group)), values_(std::move(values)) {
    if (!group_) throw Error(ErrorCode::InvalidInput, "class function without a group");
    if (values_.size() != group_->conjugacy_classes().size())
        throw Error(ErrorCode::InvalidInput, "one value per conjugacy class is required");
}

ClassFunction ClassFunction::constant(std::shared_ptr<const FiniteGroup> group, std::int64_t c) {
    const std::size_t k = group->conjugacy_classes().size();
    return ClassFunction(std::move(group), std::vector<std::int64_t>(k, c));
}

ClassFunction ClassFunction::regular(std::shared_ptr<const FiniteGroup> group) {
    std::vector<std::int64_t> v(group->conjugacy_classes().size(), 0);
    v[0] = static_cast<std::int64_t>(group->order());
    return ClassFunction(std::move(group), std::move(v));
}

ClassFunction ClassFunction::from_elements(std::shared_ptr<const FiniteGroup> group,
                                           const std::function<std::int64_t(std::size_t)>& f) {
    std::vector<std::int64_t> v;
    for (const auto& cls : group->conjugacy_classes()) v.push_back(f(cls.front()));
    return ClassFunction(std::move(group), std::move(v));
}

void ClassFunction::require_same_group(const ClassFunction& o) const {
    if (group_ != o.group_) throw Error(ErrorCode::GroupMismatch, "class functions on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    require_same_group(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = checked_add(values_[i], o.values_[i]);
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    require_same_group(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = checked_sub(values_[i], o.values_[i]);
    return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& o) {
    require_same_group(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = checked_mul(values_[i], o.values_[i]);
    return *this;
}

ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }

std::int64_t mu0(const ClassFunction& f) {
    const auto& classes = f.group().conjugacy_classes();
    std::int64_t total = 0;
    for (std::size_t c = 0; c < classes.size(); ++c)
        total = checked_add(total, checked_mul(static_cast<std::int64_t>(classes[c].size()), f.at_class(c)));
    const auto order = static_cast<std::int64_t>(f.group().order());
    if (total % order != 0)
        throw Error(ErrorCode::NonIntegralInvariant,
                    "class function average " + std::to_string(total) + "/" + std::to_string(order) +
                        " is not an integer");
    return total / order;
}

EquivariantPolynomial::EquivariantPolynomial(std::shared_ptr<const FiniteGroup> group,
                                             std::vector<IntPolynomial> per_class)
    : group_(std::move(group)), per_class_(std::move(per_class)) {
    if (!group_) throw Error(ErrorCode::InvalidInput, "equivariant polynomial without a group");
    if (per_class_.size() != group_->conjugacy_classes().size())
        throw Error(ErrorCode::InvalidInput, "one polynomial per conjugacy class is required");
}

EquivariantPolynomial EquivariantPolynomial::constant(std::shared_ptr<const FiniteGroup> group,
                                                      const IntPolynomial& p) {
    const std::size_t k = group->conjugacy_classes().size();
    return EquivariantPolynomial(std::move(group), std::vector<IntPolynomial>(k, p));
}

EquivariantPolynomial EquivariantPolynomial::from_elements(std::shared_ptr<const FiniteGroup> group,
                                                           const std::function<IntPolynomial(std::size_t)>& f) {
    std::vector<IntPolynomial> v;
    for (const auto& cls : group->conjugacy_classes()) v.push_back(f(cls.front()));
    return EquivariantPolynomial(std::move(group), std::move(v));
}

int EquivariantPolynomial::degree() const {
    int d = -1;
    for (const auto& p : per_class_) d = std::max(d, p.degree());
    return d;
}

ClassFunction EquivariantPolynomial::coefficient(std::size_t i) const {
    std::vector<std::int64_t> v;
    for (const auto& p : per_class_) v.push_back(p.coeff(i));
    return ClassFunction(group_, std::move(v));
}

void EquivariantPolynomial::require_same_group(const EquivariantPolynomial& o) const {
    if (group_ != o.group_) throw Error(ErrorCode::GroupMismatch, "equivariant polynomials on different groups");
}

EquivariantPolynomial& EquivariantPolynomial::operator+=(const EquivariantPolynomial& o) {
    require_same_group(o);
    for (std::size_t i = 0; i < per_class_.size(); ++i) per_class_[i] += o.per_class_[i];
    return *this;
}

EquivariantPolynomial& EquivariantPolynomial::operator*=(const EquivariantPolynomial& o) {
    require_same_group(o);
    for (std::size_t i = 0; i < per_class_.size(); ++i) per_class_[i] *= o.per_class_[i];
    return *this;
}

EquivariantPolynomial operator+(EquivariantPolynomial a, const EquivariantPolynomial& b) { return a += b; }
EquivariantPolynomial operator*(EquivariantPolynomial a, const EquivariantPolynomial& b) { return a *= b; }

IntPolynomial mu0(const EquivariantPolynomial& p) {
    const auto& classes = p.group().conjugacy_classes();
    IntPolynomial total;
    for (std::size_t c = 0; c < classes.size(); ++c)
        total += static_cast<std::int64_t>(classes[c].size()) * p.at_class(c);
    return total.divide_exact(static_cast<std::int64_t>(p.group().order()));
}

IntPolynomial equivariant_product_invariants(std::span<const EquivariantPolynomial> factors) {
    if (factors.empty()) return IntPolynomial::constant(1);
    EquivariantPolynomial product = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        if (factors[i].shared_group() != product.shared_group())
            throw Error(ErrorCode::GroupMismatch, "factor " + std::to_string(i) + " lives on a different group");
        product *= factors[i];
    }
    return mu0(product);
}

} // namespace kummer
