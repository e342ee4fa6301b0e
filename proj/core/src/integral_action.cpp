#include "kummer/groupcore/integral_action.hpp"

#include "kummer/error.hpp"

namespace kummer {

namespace {

Element flatten(const IntMatrix& m) { return Element(m.data().begin(), m.data().end()); }

IntMatrix unflatten(const Element& e, std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = e[i * n + j];
    return m;
}

} // namespace

IntegralAction IntegralAction::generate(const std::vector<IntMatrix>& generators, unsigned d,
                                        const GenerateOptions& options, std::string label) {
    if (generators.empty()) throw Error(ErrorCode::InvalidInput, "at least one generator is required");
    if (d == 0) throw Error(ErrorCode::InvalidInput, "d must be positive");
    const std::size_t r = generators.front().rows();
    std::vector<Element> flat;
    for (const auto& g : generators) {
        if (!g.is_square() || g.rows() != r)
            throw Error(ErrorCode::InvalidInput, "generators must be square matrices of equal size");
        const auto det = g.determinant();
        if (det != 1 && det != -1)
            throw Error(ErrorCode::NonInvertible,
                        "generator " + g.to_string() + " has determinant " + std::to_string(det));
        flat.push_back(flatten(g));
    }

    IntegralAction a;
    a.group_ = std::make_shared<const FiniteGroup>(
        FiniteGroup::generate(FiniteGroup::Kind::Matrix, r, flat, options.cap));
    a.generators_ = generators;
    a.rank_ = r;
    a.d_ = d;
    a.special_ = options.special;
    a.label_ = std::move(label);
    a.matrices_.reserve(a.group_->order());
    for (const auto& e : a.group_->elements()) a.matrices_.push_back(unflatten(e, r));
    if (options.special)
        for (const auto& m : a.matrices_)
            if (m.determinant() != 1)
                throw Error(ErrorCode::SpecialityViolation, "element " + m.to_string() + " has determinant -1");
    return a;
}

std::size_t IntegralAction::index_of(const IntMatrix& m) const {
    if (auto i = group_->find(flatten(m))) return *i;
    throw Error(ErrorCode::InvalidInput, m.to_string() + " is not an element of the group");
}

IntegralAction IntegralAction::with_d(unsigned d) const {
    if (d == 0) throw Error(ErrorCode::InvalidInput, "d must be positive");
    IntegralAction copy = *this;
    copy.d_ = d;
    return copy;
}

AbstractGroup AbstractGroup::generate(std::size_t degree, const std::vector<Element>& generators,
                                      std::size_t cap, std::string label) {
    AbstractGroup a;
    a.group_ = std::make_shared<const FiniteGroup>(
        FiniteGroup::generate(FiniteGroup::Kind::Permutation, degree, generators, cap));
    a.label_ = std::move(label);
    return a;
}

} // namespace kummer
