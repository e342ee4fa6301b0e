#include "kummer/symcheck/symplectic.hpp"

#include <algorithm>

#include "kummer/error.hpp"
#include "kummer/groupcore/subgroup_poset.hpp"
#include "kummer/mckay/partitions.hpp"

namespace kummer {

namespace {

std::size_t codimension(const AnalyticEigenData& data, std::size_t element) {
    const auto& e = data.at_class(data.group().class_of(element));
    return e.size() - e.zero_count();
}

bool is_abelian(const FiniteGroup& g, const Subgroup& h) {
    for (auto a : h.elements())
        for (auto b : h.elements())
            if (!g.commute(a, b)) return false;
    return true;
}

std::size_t factorial(std::size_t n) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

ReflectionGeneration symplectic_reflection_generated(const AnalyticEigenData& data) {
    const auto& g = data.group();
    ReflectionGeneration out;
    for (std::size_t e = 0; e < g.order(); ++e)
        if (e != g.identity() && codimension(data, e) == 2) out.reflections.push_back(e);
    out.generated_order = g.closure(out.reflections).order();
    out.generated = out.generated_order == g.order();
    return out;
}

PurityReport codim2_purity_report(const AnalyticEigenData& data) {
    const auto& g = data.group();
    PurityReport report;
    const auto& classes = g.conjugacy_classes();
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto rep = classes[c].front();
        if (rep == g.identity()) continue;
        ClassCodimension row;
        row.class_index = c;
        row.representative = rep;
        row.element_order = g.element_order(rep);
        row.codimension = codimension(data, rep);
        const auto count = lefschetz_count(data, c);
        row.isolated = count.isolated;
        row.fixed_points = count.count;
        if (row.codimension > 2) report.all_codim_two = false;
        report.classes.push_back(row);
    }
    return report;
}

std::string BlsMatch::to_string() const {
    switch (kind) {
    case Kind::TypeA: return "TypeA(" + std::to_string(n) + ")";
    case Kind::TypeBC: return "TypeBC(" + std::to_string(n) + "," + std::to_string(m) + ")";
    case Kind::BinaryTetrahedral: return "BinaryTetrahedral";
    case Kind::NoMatch: break;
    }
    return "NoMatch";
}

BlsMatch bls_classify(const AnalyticEigenData& data) {
    const auto& g = data.group();
    const std::size_t n = data.dimension();
    if (n % 2 != 0) throw Error(ErrorCode::ShapeMismatch, "odd-dimensional data cannot be of the form V + V*");
    for (const auto& e : data.classes())
        if (!e.is_self_conjugate())
            throw Error(ErrorCode::ShapeMismatch, "exponents " + e.to_string() + " are not closed under a -> 1 - a");
    const auto k = static_cast<unsigned>(n / 2);
    if (k == 0) return {};

    if (g.order() == factorial(k + 1) && g.conjugacy_classes().size() == partitions(k + 1).size())
        return {BlsMatch::Kind::TypeA, k, 0};

    const std::size_t k_factorial = factorial(k);
    std::size_t power = 1;
    for (unsigned m = 2;; ++m) {
        power = 1;
        for (unsigned i = 0; i < k; ++i) power *= m;
        if (power * k_factorial > g.order()) break;
        if (power * k_factorial != g.order()) continue;
        const SubgroupClassPoset poset(g);
        for (const auto& cls : poset.classes()) {
            const auto& h = cls.representative;
            if (cls.size() != 1 || h.order() != power || !is_abelian(g, h)) continue;
            const bool exponent_divides =
                std::all_of(h.elements().begin(), h.elements().end(),
                            [&](std::size_t x) { return m % g.element_order(x) == 0; });
            if (exponent_divides) return {BlsMatch::Kind::TypeBC, k, m};
        }
    }

    if (g.order() == 24 && k == 2) {
        std::size_t involutions = 0;
        for (std::size_t e = 0; e < g.order(); ++e)
            if (g.element_order(e) == 2) ++involutions;
        if (involutions == 1) return {BlsMatch::Kind::BinaryTetrahedral, 0, 0};
    }
    return {};
}

} // namespace kummer
