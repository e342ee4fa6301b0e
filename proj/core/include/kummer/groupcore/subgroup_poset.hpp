#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "kummer/groupcore/finite_group.hpp"

namespace kummer {

/// One conjugacy class [H] of subgroups.
struct SubgroupClass {
    Subgroup representative;            // lexicographically smallest conjugate
    std::vector<Subgroup> members;      // all conjugates, sorted
    Subgroup normalizer;                // N(representative)
    std::vector<std::size_t> weyl_coset_representatives;  // smallest element of each coset of H in N
    std::size_t weyl_order() const { return normalizer.order() / representative.order(); }
    std::size_t size() const { return members.size(); }
};

/// All conjugacy classes of subgroups with the subconjugacy order.
class SubgroupClassPoset {
public:
    explicit SubgroupClassPoset(const FiniteGroup& group);

    /// Ordered by (order, representative); the trivial class is first and [G] last.
    const std::vector<SubgroupClass>& classes() const noexcept { return classes_; }
    std::size_t size() const noexcept { return classes_.size(); }
    const SubgroupClass& operator[](std::size_t i) const { return classes_.at(i); }

    /// [a] is subconjugate to [b].
    bool precedes(std::size_t a, std::size_t b) const { return leq_[a][b]; }
    std::size_t class_index_of(const Subgroup& h) const;
    /// Every subgroup of the group, sorted.
    const std::vector<Subgroup>& all_subgroups() const noexcept { return subgroups_; }

private:
    std::vector<SubgroupClass> classes_;
    std::vector<std::vector<bool>> leq_;
    std::vector<Subgroup> subgroups_;
    std::vector<std::size_t> class_of_subgroup_;
};

/// Action of N/H on the conjugacy classes of H (H normal in N).
struct WeylClassAction {
    std::vector<std::vector<std::size_t>> h_classes;  // classes of H, identity class first
    std::vector<std::size_t> coset_representatives;   // one element of N per coset of H
    /// permutation[i][c]: image of class c under coset_representatives[i].
    std::vector<std::vector<std::size_t>> permutation;

    /// Image of class c under an arbitrary element n of N.
    std::size_t image(const FiniteGroup& g, std::size_t n, std::size_t c) const;
    /// Number of classes fixed by the coset of n.
    std::size_t fixed_count(const FiniteGroup& g, std::size_t n) const;
};

/// N/H as a permutation group on the left cosets of H (a faithful model).
struct QuotientGroup {
    std::shared_ptr<const FiniteGroup> group;
    /// lift[w]: an element of N mapping to quotient element w.
    std::vector<std::size_t> lift;
    /// Quotient element of each element of N (indexed by group element; -1 outside N).
    std::vector<std::ptrdiff_t> project;
};

/// Throws NotNormalizer unless N normalizes H.
QuotientGroup quotient_group(const FiniteGroup& group, const Subgroup& n, const Subgroup& h);

/// Throws NotNormalizer unless N normalizes H.
WeylClassAction weyl_action_on_classes(const FiniteGroup& group, const Subgroup& h, const Subgroup& n);

} // namespace kummer
