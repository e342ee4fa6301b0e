#include "kummer/groupcore/subgroup_poset.hpp"

#include <algorithm>
#include <set>

#include "kummer/error.hpp"

namespace kummer {

SubgroupClassPoset::SubgroupClassPoset(const FiniteGroup& group) {
    // Cyclic subgroups, then joins with cyclic subgroups until nothing new appears.
    std::set<Subgroup> cyclic;
    for (std::size_t g = 0; g < group.order(); ++g) {
        const std::size_t gen[1] = {g};
        cyclic.insert(group.closure(gen));
    }
    std::set<Subgroup> all = cyclic;
    std::vector<Subgroup> frontier(cyclic.begin(), cyclic.end());
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& a : frontier) {
            const auto gens_a = group.generating_set(a);
            for (const auto& c : cyclic) {
                if (c.is_subset_of(a)) continue;
                std::vector<std::size_t> gens = gens_a;
                gens.push_back(group.generating_set(c).front());
                Subgroup j = group.closure(gens);
                if (all.insert(j).second) next.push_back(std::move(j));
            }
        }
        frontier = std::move(next);
    }
    subgroups_.assign(all.begin(), all.end());

    class_of_subgroup_.assign(subgroups_.size(), subgroups_.size());
    for (std::size_t i = 0; i < subgroups_.size(); ++i) {
        if (class_of_subgroup_[i] != subgroups_.size()) continue;
        std::set<Subgroup> conj;
        for (std::size_t g = 0; g < group.order(); ++g) conj.insert(group.conjugate(g, subgroups_[i]));
        SubgroupClass cls;
        cls.members.assign(conj.begin(), conj.end());
        cls.representative = cls.members.front();
        cls.normalizer = group.normalizer(cls.representative);
        std::vector<bool> covered(group.order(), false);
        for (auto n : cls.normalizer.elements()) {
            if (covered[n]) continue;
            cls.weyl_coset_representatives.push_back(n);
            for (auto h : cls.representative.elements()) covered[group.multiply(n, h)] = true;
        }
        for (const auto& m : cls.members) {
            auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), m);
            class_of_subgroup_[static_cast<std::size_t>(it - subgroups_.begin())] = classes_.size();
        }
        classes_.push_back(std::move(cls));
    }

    // Reorder classes by (order, representative).
    std::vector<std::size_t> perm(classes_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [this](auto a, auto b) { return classes_[a].representative < classes_[b].representative; });
    std::vector<std::size_t> new_index(perm.size());
    std::vector<SubgroupClass> sorted;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        new_index[perm[i]] = i;
        sorted.push_back(std::move(classes_[perm[i]]));
    }
    classes_ = std::move(sorted);
    for (auto& c : class_of_subgroup_) c = new_index[c];

    const std::size_t k = classes_.size();
    leq_.assign(k, std::vector<bool>(k, false));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            if (classes_[a].representative.order() > classes_[b].representative.order()) continue;
            if (classes_[b].representative.order() % classes_[a].representative.order() != 0) continue;
            for (const auto& m : classes_[a].members)
                if (m.is_subset_of(classes_[b].representative)) {
                    leq_[a][b] = true;
                    break;
                }
        }
}

std::size_t SubgroupClassPoset::class_index_of(const Subgroup& h) const {
    auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), h);
    if (it == subgroups_.end() || *it != h) throw Error(ErrorCode::InvalidInput, "not a subgroup of the group");
    return class_of_subgroup_[static_cast<std::size_t>(it - subgroups_.begin())];
}

std::size_t WeylClassAction::image(const FiniteGroup& g, std::size_t n, std::size_t c) const {
    const std::size_t x = g.conjugate(n, h_classes[c].front());
    for (std::size_t i = 0; i < h_classes.size(); ++i)
        if (std::binary_search(h_classes[i].begin(), h_classes[i].end(), x)) return i;
    throw Error(ErrorCode::NotNormalizer, "conjugate left the subgroup");
}

std::size_t WeylClassAction::fixed_count(const FiniteGroup& g, std::size_t n) const {
    std::size_t k = 0;
    for (std::size_t c = 0; c < h_classes.size(); ++c)
        if (image(g, n, c) == c) ++k;
    return k;
}

namespace {

void require_normalizes(const FiniteGroup& group, const Subgroup& h, const Subgroup& n) {
    if (!h.is_subset_of(n)) throw Error(ErrorCode::NotNormalizer, "subgroup is not contained in the given group");
    for (auto x : group.generating_set(n))
        if (group.conjugate(x, h) != h)
            throw Error(ErrorCode::NotNormalizer, "given group does not normalize the subgroup");
}

} // namespace

QuotientGroup quotient_group(const FiniteGroup& group, const Subgroup& n, const Subgroup& h) {
    require_normalizes(group, h, n);
    // Cosets xH, labelled by their smallest element.
    std::vector<std::ptrdiff_t> coset_of(group.order(), -1);
    std::vector<std::size_t> reps;
    for (auto x : n.elements()) {
        if (coset_of[x] >= 0) continue;
        for (auto y : h.elements()) coset_of[group.multiply(x, y)] = static_cast<std::ptrdiff_t>(reps.size());
        reps.push_back(x);
    }
    auto as_permutation = [&](std::size_t g) {
        Element p(reps.size());
        for (std::size_t c = 0; c < reps.size(); ++c) p[c] = coset_of[group.multiply(g, reps[c])];
        return p;
    };
    std::vector<Element> gens;
    for (auto g : group.generating_set(n)) gens.push_back(as_permutation(g));
    QuotientGroup q;
    q.group = std::make_shared<const FiniteGroup>(
        FiniteGroup::generate(FiniteGroup::Kind::Permutation, reps.size(), gens, group.order() + 1));
    q.lift.assign(q.group->order(), 0);
    q.project.assign(group.order(), -1);
    for (auto x : n.elements()) {
        const auto w = *q.group->find(as_permutation(x));
        q.project[x] = static_cast<std::ptrdiff_t>(w);
        if (coset_of[x] >= 0 && reps[static_cast<std::size_t>(coset_of[x])] == x) q.lift[w] = x;
    }
    return q;
}

WeylClassAction weyl_action_on_classes(const FiniteGroup& group, const Subgroup& h, const Subgroup& n) {
    require_normalizes(group, h, n);
    WeylClassAction w;
    w.h_classes = group.classes_within(h);
    std::vector<bool> covered(group.order(), false);
    for (auto x : n.elements()) {
        if (covered[x]) continue;
        w.coset_representatives.push_back(x);
        for (auto y : h.elements()) covered[group.multiply(x, y)] = true;
    }
    for (auto x : w.coset_representatives) {
        std::vector<std::size_t> p(w.h_classes.size());
        for (std::size_t c = 0; c < p.size(); ++c) p[c] = w.image(group, x, c);
        w.permutation.push_back(std::move(p));
    }
    return w;
}

} // namespace kummer
