#include "kummer/groupcore/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "kummer/error.hpp"
#include "kummer/exactalg/checked.hpp"

namespace kummer {

namespace {

constexpr std::size_t kTableLimit = 2048;

} // namespace

Subgroup::Subgroup(std::vector<std::size_t> elements, std::size_t group_order)
    : elements_(std::move(elements)), mask_(group_order) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (auto e : elements_) mask_.set(e);
}

Element FiniteGroup::identity_element() const {
    Element e;
    if (kind_ == Kind::Matrix) {
        e.assign(degree_ * degree_, 0);
        for (std::size_t i = 0; i < degree_; ++i) e[i * degree_ + i] = 1;
    } else {
        e.resize(degree_);
        for (std::size_t i = 0; i < degree_; ++i) e[i] = static_cast<std::int64_t>(i);
    }
    return e;
}

Element FiniteGroup::multiply_elements(const Element& a, const Element& b) const {
    const std::size_t n = degree_;
    if (kind_ == Kind::Permutation) {
        Element c(n);
        for (std::size_t x = 0; x < n; ++x) c[x] = a[static_cast<std::size_t>(b[x])];
        return c;
    }
    Element c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const std::int64_t aik = a[i * n + k];
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                c[i * n + j] = checked_add(c[i * n + j], checked_mul(aik, b[k * n + j]));
        }
    return c;
}

FiniteGroup FiniteGroup::generate(Kind kind, std::size_t degree, const std::vector<Element>& generators,
                                  std::size_t cap) {
    FiniteGroup g;
    g.kind_ = kind;
    g.degree_ = degree;
    const std::size_t expected = kind == Kind::Matrix ? degree * degree : degree;
    for (const auto& gen : generators) {
        if (gen.size() != expected)
            throw Error(ErrorCode::InvalidInput, "generator has the wrong size for degree " + std::to_string(degree));
        if (kind == Kind::Permutation) {
            std::vector<bool> seen(degree, false);
            for (auto x : gen) {
                if (x < 0 || static_cast<std::size_t>(x) >= degree || seen[static_cast<std::size_t>(x)])
                    throw Error(ErrorCode::InvalidInput, "generator is not a permutation");
                seen[static_cast<std::size_t>(x)] = true;
            }
        }
    }

    std::set<Element> found{g.identity_element()};
    std::deque<Element> frontier{g.identity_element()};
    try {
        while (!frontier.empty()) {
            Element a = std::move(frontier.front());
            frontier.pop_front();
            for (const auto& gen : generators) {
                Element b = g.multiply_elements(a, gen);
                if (found.insert(b).second) {
                    if (found.size() > cap)
                        throw Error(ErrorCode::NotFiniteWithinCap,
                                    "closure exceeds " + std::to_string(cap) + " elements");
                    frontier.push_back(std::move(b));
                }
            }
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Overflow)
            throw Error(ErrorCode::NotFiniteWithinCap, "entries grow without bound; group is infinite");
        throw;
    }
    g.elements_.assign(found.begin(), found.end());
    g.identity_ = *g.find(g.identity_element());
    for (const auto& gen : generators) g.generators_.push_back(*g.find(gen));
    g.build_tables();
    return g;
}

std::optional<std::size_t> FiniteGroup::find(const Element& e) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
    if (it == elements_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t FiniteGroup::multiply(std::size_t a, std::size_t b) const {
    if (!table_.empty()) return table_[a * elements_.size() + b];
    return *find(multiply_elements(elements_[a], elements_[b]));
}

std::size_t FiniteGroup::conjugate(std::size_t g, std::size_t h) const {
    return multiply(multiply(g, h), inverse_[g]);
}

void FiniteGroup::build_tables() {
    const std::size_t n = elements_.size();
    if (n <= kTableLimit) {
        table_.resize(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                table_[a * n + b] = static_cast<std::uint32_t>(*find(multiply_elements(elements_[a], elements_[b])));
    }

    inverse_.assign(n, n);
    element_order_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t power = a;
        std::size_t k = 1;
        std::size_t previous = identity_;
        while (power != identity_) {
            previous = power;
            power = multiply(power, a);
            ++k;
        }
        element_order_[a] = k;
        inverse_[a] = (a == identity_) ? identity_ : previous;
    }

    class_of_.assign(n, n);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t a = 0; a < n; ++a) {
        if (class_of_[a] != n) continue;
        std::vector<std::size_t> members{a};
        class_of_[a] = classes.size();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (auto gen : generators_) {
                const std::size_t c = conjugate(gen, members[i]);
                if (class_of_[c] == n) {
                    class_of_[c] = classes.size();
                    members.push_back(c);
                }
            }
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    }
    std::stable_sort(classes.begin(), classes.end(), [this](const auto& x, const auto& y) {
        const auto ox = element_order_[x.front()];
        const auto oy = element_order_[y.front()];
        return ox != oy ? ox < oy : x.front() < y.front();
    });
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (auto e : classes[c]) class_of_[e] = c;
    classes_ = std::move(classes);
}

Subgroup FiniteGroup::whole() const {
    std::vector<std::size_t> all(elements_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return Subgroup(std::move(all), elements_.size());
}

Subgroup FiniteGroup::trivial() const { return Subgroup({identity_}, elements_.size()); }

Subgroup FiniteGroup::closure(std::span<const std::size_t> gens) const {
    const std::size_t n = elements_.size();
    std::vector<bool> in(n, false);
    std::vector<std::size_t> members{identity_};
    in[identity_] = true;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (auto g : gens) {
            const std::size_t c = multiply(members[i], g);
            if (!in[c]) {
                in[c] = true;
                members.push_back(c);
            }
        }
    return Subgroup(std::move(members), n);
}

std::vector<std::size_t> FiniteGroup::generating_set(const Subgroup& h) const {
    std::vector<std::size_t> gens;
    Subgroup current = trivial();
    // Prefer elements of large order so cyclic pieces come out in one step.
    std::vector<std::size_t> candidates(h.elements().begin(), h.elements().end());
    std::stable_sort(candidates.begin(), candidates.end(),
                     [this](auto x, auto y) { return element_order_[x] > element_order_[y]; });
    for (auto e : candidates) {
        if (current.order() == h.order()) break;
        if (current.contains(e)) continue;
        gens.push_back(e);
        current = closure(gens);
    }
    return gens;
}

Subgroup FiniteGroup::conjugate(std::size_t g, const Subgroup& h) const {
    std::vector<std::size_t> out;
    out.reserve(h.order());
    for (auto x : h.elements()) out.push_back(conjugate(g, x));
    return Subgroup(std::move(out), elements_.size());
}

Subgroup FiniteGroup::normalizer(const Subgroup& h) const {
    const auto gens = generating_set(h);
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < elements_.size(); ++g) {
        bool keeps = true;
        for (auto x : gens)
            if (!h.contains(conjugate(g, x))) {
                keeps = false;
                break;
            }
        if (keeps) out.push_back(g);
    }
    return Subgroup(std::move(out), elements_.size());
}

Subgroup FiniteGroup::centralizer(std::size_t a) const {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < elements_.size(); ++g)
        if (commute(g, a)) out.push_back(g);
    return Subgroup(std::move(out), elements_.size());
}

std::vector<std::vector<std::size_t>> FiniteGroup::classes_within(const Subgroup& h) const {
    const auto gens = generating_set(h);
    std::vector<bool> seen(elements_.size(), false);
    std::vector<std::vector<std::size_t>> out;
    for (auto a : h.elements()) {
        if (seen[a]) continue;
        std::vector<std::size_t> members{a};
        seen[a] = true;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (auto g : gens) {
                const std::size_t c = conjugate(g, members[i]);
                if (!seen[c]) {
                    seen[c] = true;
                    members.push_back(c);
                }
            }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::stable_sort(out.begin(), out.end(), [this](const auto& x, const auto& y) {
        const bool ix = x.front() == identity_;
        const bool iy = y.front() == identity_;
        return ix != iy ? ix : x.front() < y.front();
    });
    return out;
}

} // namespace kummer
