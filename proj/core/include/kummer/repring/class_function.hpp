#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "kummer/exactalg/polynomial.hpp"
#include "kummer/groupcore/finite_group.hpp"

namespace kummer {

/// Integer-valued class function, one value per conjugacy class of the group.
class ClassFunction {
public:
    ClassFunction(std::shared_ptr<const FiniteGroup> group, std::vector<std::int64_t> values);

    static ClassFunction constant(std::shared_ptr<const FiniteGroup> group, std::int64_t c);
    static ClassFunction trivial(std::shared_ptr<const FiniteGroup> group) { return constant(std::move(group), 1); }
    /// |G| at the identity, 0 elsewhere.
    static ClassFunction regular(std::shared_ptr<const FiniteGroup> group);
    /// Evaluates `f` on one representative per class.
    static ClassFunction from_elements(std::shared_ptr<const FiniteGroup> group,
                                       const std::function<std::int64_t(std::size_t)>& f);

    const FiniteGroup& group() const noexcept { return *group_; }
    const std::shared_ptr<const FiniteGroup>& shared_group() const noexcept { return group_; }
    std::span<const std::int64_t> values() const noexcept { return values_; }
    std::int64_t at_class(std::size_t c) const { return values_.at(c); }
    std::int64_t operator()(std::size_t element) const { return values_.at(group_->class_of(element)); }

    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    ClassFunction& operator*=(const ClassFunction& o);

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.group_ == b.group_ && a.values_ == b.values_;
    }

private:
    void require_same_group(const ClassFunction& o) const;

    std::shared_ptr<const FiniteGroup> group_;
    std::vector<std::int64_t> values_;
};

ClassFunction operator+(ClassFunction a, const ClassFunction& b);
ClassFunction operator-(ClassFunction a, const ClassFunction& b);
ClassFunction operator*(ClassFunction a, const ClassFunction& b);

/// Multiplicity of the trivial representation: (1/|G|) sum_g f(g).
/// Throws NonIntegralInvariant when the average is not an integer.
std::int64_t mu0(const ClassFunction& f);

/// Polynomial in t whose coefficients are class functions, stored as one
/// integer polynomial per conjugacy class.
class EquivariantPolynomial {
public:
    EquivariantPolynomial(std::shared_ptr<const FiniteGroup> group, std::vector<IntPolynomial> per_class);

    static EquivariantPolynomial constant(std::shared_ptr<const FiniteGroup> group, const IntPolynomial& p);
    static EquivariantPolynomial from_elements(std::shared_ptr<const FiniteGroup> group,
                                               const std::function<IntPolynomial(std::size_t)>& f);

    const FiniteGroup& group() const noexcept { return *group_; }
    const std::shared_ptr<const FiniteGroup>& shared_group() const noexcept { return group_; }
    const IntPolynomial& at_class(std::size_t c) const { return per_class_.at(c); }
    const IntPolynomial& operator()(std::size_t element) const { return per_class_.at(group_->class_of(element)); }
    /// Value at the identity: the underlying non-equivariant polynomial.
    const IntPolynomial& underlying() const { return per_class_.front(); }
    int degree() const;
    ClassFunction coefficient(std::size_t i) const;

    EquivariantPolynomial& operator+=(const EquivariantPolynomial& o);
    EquivariantPolynomial& operator*=(const EquivariantPolynomial& o);

    friend bool operator==(const EquivariantPolynomial& a, const EquivariantPolynomial& b) {
        return a.group_ == b.group_ && a.per_class_ == b.per_class_;
    }

private:
    void require_same_group(const EquivariantPolynomial& o) const;

    std::shared_ptr<const FiniteGroup> group_;
    std::vector<IntPolynomial> per_class_;
};

EquivariantPolynomial operator+(EquivariantPolynomial a, const EquivariantPolynomial& b);
EquivariantPolynomial operator*(EquivariantPolynomial a, const EquivariantPolynomial& b);

/// mu0 applied coefficient-wise.
IntPolynomial mu0(const EquivariantPolynomial& p);

/// mu0 of the coefficient-wise product. Throws GroupMismatch unless all
/// factors share one group.
IntPolynomial equivariant_product_invariants(std::span<const EquivariantPolynomial> factors);

} // namespace kummer
