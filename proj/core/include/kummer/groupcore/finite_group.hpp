#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace kummer {

/// Flattened group element: an n x n integer matrix in row-major order, or
/// the image list of a permutation of {0, ..., n-1}.
using Element = std::vector<std::int64_t>;

/// Set of element indices of a FiniteGroup, sorted ascending.
class Subgroup {
public:
    Subgroup() = default;
    Subgroup(std::vector<std::size_t> elements, std::size_t group_order);

    std::span<const std::size_t> elements() const noexcept { return elements_; }
    std::size_t order() const noexcept { return elements_.size(); }
    bool contains(std::size_t g) const { return g < mask_.size() && mask_.test(g); }
    bool is_subset_of(const Subgroup& other) const { return mask_.is_subset_of(other.mask_); }
    const boost::dynamic_bitset<>& mask() const noexcept { return mask_; }

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }
    friend auto operator<=>(const Subgroup& a, const Subgroup& b) {
        if (a.elements_.size() != b.elements_.size()) return a.elements_.size() <=> b.elements_.size();
        return a.elements_ <=> b.elements_;
    }

private:
    std::vector<std::size_t> elements_;
    boost::dynamic_bitset<> mask_;
};

/// A finite group stored by its full element list (sorted lexicographically,
/// so indices are deterministic), with inverses and conjugacy classes.
class FiniteGroup {
public:
    enum class Kind { Matrix, Permutation };

    /// Closure of `generators` under multiplication. Throws NotFiniteWithinCap
    /// once more than `cap` elements have been produced.
    static FiniteGroup generate(Kind kind, std::size_t degree, const std::vector<Element>& generators,
                                std::size_t cap);

    Kind kind() const noexcept { return kind_; }
    /// Matrix size or number of permuted points.
    std::size_t degree() const noexcept { return degree_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<Element>& elements() const noexcept { return elements_; }
    const Element& element(std::size_t i) const { return elements_.at(i); }
    std::size_t identity() const noexcept { return identity_; }
    /// Indices of the generators the group was built from.
    std::span<const std::size_t> generators() const noexcept { return generators_; }

    std::optional<std::size_t> find(const Element& e) const;
    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    /// g h g^-1
    std::size_t conjugate(std::size_t g, std::size_t h) const;
    std::size_t element_order(std::size_t a) const { return element_order_[a]; }
    bool commute(std::size_t a, std::size_t b) const { return multiply(a, b) == multiply(b, a); }

    /// Conjugacy classes ordered by (element order, smallest index); identity first.
    const std::vector<std::vector<std::size_t>>& conjugacy_classes() const noexcept { return classes_; }
    std::size_t class_of(std::size_t a) const { return class_of_[a]; }

    Subgroup whole() const;
    Subgroup trivial() const;
    Subgroup closure(std::span<const std::size_t> generators) const;
    /// Small generating set, chosen greedily from the smallest indices.
    std::vector<std::size_t> generating_set(const Subgroup& h) const;
    Subgroup conjugate(std::size_t g, const Subgroup& h) const;
    Subgroup normalizer(const Subgroup& h) const;
    Subgroup centralizer(std::size_t a) const;
    /// Conjugacy classes of H under H-conjugation, each sorted, ordered by smallest index.
    std::vector<std::vector<std::size_t>> classes_within(const Subgroup& h) const;

    /// Raw product of two flattened elements.
    Element multiply_elements(const Element& a, const Element& b) const;
    Element identity_element() const;

private:
    FiniteGroup() = default;
    void build_tables();

    Kind kind_ = Kind::Matrix;
    std::size_t degree_ = 0;
    std::vector<Element> elements_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> generators_;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> element_order_;
    std::vector<std::vector<std::size_t>> classes_;
    std::vector<std::size_t> class_of_;
    // Full Cayley table for small groups; otherwise products are looked up.
    std::vector<std::uint32_t> table_;
};

} // namespace kummer
