#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "kummer/exactalg/int_matrix.hpp"
#include "kummer/groupcore/finite_group.hpp"

namespace kummer {

struct GenerateOptions {
    std::size_t cap = 10000;
    /// Require determinant +1 on every element.
    bool special = false;
};

/// Finite group of invertible integer r x r matrices acting on A^r, A of
/// complex dimension d.
class IntegralAction {
public:
    /// Throws NonInvertible, NotFiniteWithinCap, SpecialityViolation.
    static IntegralAction generate(const std::vector<IntMatrix>& generators, unsigned d,
                                   const GenerateOptions& options = {}, std::string label = {});

    const FiniteGroup& group() const noexcept { return *group_; }
    std::shared_ptr<const FiniteGroup> shared_group() const noexcept { return group_; }
    std::size_t order() const noexcept { return group_->order(); }
    std::size_t rank() const noexcept { return rank_; }
    unsigned d() const noexcept { return d_; }
    bool special() const noexcept { return special_; }
    const std::string& label() const noexcept { return label_; }
    const std::vector<IntMatrix>& generator_matrices() const noexcept { return generators_; }

    const IntMatrix& matrix(std::size_t i) const { return matrices_.at(i); }
    const std::vector<IntMatrix>& matrices() const noexcept { return matrices_; }
    std::size_t index_of(const IntMatrix& m) const;

    /// Same group with another torus dimension.
    IntegralAction with_d(unsigned d) const;

private:
    IntegralAction() = default;

    std::shared_ptr<const FiniteGroup> group_;
    std::vector<IntMatrix> generators_;
    std::vector<IntMatrix> matrices_;
    std::size_t rank_ = 0;
    unsigned d_ = 1;
    bool special_ = false;
    std::string label_;
};

/// Finite group given only as permutations (no integral model).
class AbstractGroup {
public:
    static AbstractGroup generate(std::size_t degree, const std::vector<Element>& generators,
                                  std::size_t cap = 10000, std::string label = {});

    const FiniteGroup& group() const noexcept { return *group_; }
    std::shared_ptr<const FiniteGroup> shared_group() const noexcept { return group_; }
    std::size_t order() const noexcept { return group_->order(); }
    const std::string& label() const noexcept { return label_; }

private:
    AbstractGroup() = default;
    std::shared_ptr<const FiniteGroup> group_;
    std::string label_;
};

} // namespace kummer
