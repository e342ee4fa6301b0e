#include "kummer/symcheck/counting.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "kummer/error.hpp"
#include "kummer/exactalg/checked.hpp"

namespace kummer {

namespace {

bool is_power_of(std::int64_t value, std::int64_t base) {
    if (value < 1 || base < 2) return value == 1;
    while (value % base == 0) value /= base;
    return value == 1;
}

struct CompiledTerm {
    std::int64_t coefficient;
    std::vector<std::size_t> factors;
};

std::int64_t evaluate(const std::vector<CompiledTerm>& terms, const std::vector<std::int64_t>& x) {
    std::int64_t total = 0;
    for (const auto& t : terms) {
        std::int64_t v = t.coefficient;
        for (auto f : t.factors) v = checked_mul(v, x[f]);
        total = checked_add(total, v);
    }
    return total;
}

/// For an equation linear in a single unknown, explain why it has no admissible solution.
std::optional<std::string> single_unknown_witness(const CountingEquation& eq, const CountingUnknown& u,
                                                  const std::vector<CompiledTerm>& terms, std::size_t index) {
    std::int64_t a = 0;
    std::int64_t b = 0;
    for (const auto& t : terms) {
        if (t.factors.empty()) {
            b = checked_add(b, t.coefficient);
        } else if (t.factors.size() == 1 && t.factors[0] == index) {
            a = checked_add(a, t.coefficient);
        } else {
            return std::nullopt;
        }
    }
    std::ostringstream os;
    os << describe_equation(eq) << " forces " << a << u.name << " = " << -b;
    if (a == 0) {
        os << ", impossible";
    } else if ((-b) % a != 0) {
        os << ", which has no integer solution";
    } else {
        os << ", i.e. " << u.name << " = " << -b / a << ", outside [" << *u.min << ", " << *u.max << "]";
        if (!u.power_of.empty()) os << " or violating its power condition";
    }
    return os.str();
}

} // namespace

std::string describe_equation(const CountingEquation& equation) {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : equation.terms) {
        if (t.coefficient == 0) continue;
        const std::int64_t mag = t.coefficient < 0 ? -t.coefficient : t.coefficient;
        if (first) {
            if (t.coefficient < 0) os << '-';
        } else {
            os << (t.coefficient < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || t.unknowns.empty()) os << mag;
        for (std::size_t i = 0; i < t.unknowns.size(); ++i) os << (i ? "*" : "") << t.unknowns[i];
    }
    if (first) os << '0';
    os << " = 0";
    return os.str();
}

FeasibilityResult counting_feasibility(const CountingConstraint& constraint, std::int64_t budget) {
    const auto& unknowns = constraint.unknowns;
    std::int64_t space = 1;
    for (const auto& u : unknowns) {
        if (!u.min || !u.max)
            throw Error(ErrorCode::UnboundedSearch, "unknown '" + u.name + "' needs both bounds");
        if (*u.min > *u.max) throw Error(ErrorCode::InvalidInput, "empty range for '" + u.name + "'");
        const std::int64_t width = *u.max - *u.min + 1;
        if (space > budget / width)
            throw Error(ErrorCode::EnumerationTooLarge, "search space exceeds " + std::to_string(budget));
        space *= width;
    }
    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < unknowns.size(); ++i)
            if (unknowns[i].name == name) return i;
        throw Error(ErrorCode::InvalidInput, "equation mentions undeclared unknown '" + name + "'");
    };
    std::vector<std::vector<CompiledTerm>> equations;
    for (const auto& eq : constraint.equations) {
        std::vector<CompiledTerm> terms;
        for (const auto& t : eq.terms) {
            CompiledTerm c{t.coefficient, {}};
            for (const auto& name : t.unknowns) c.factors.push_back(index_of(name));
            terms.push_back(std::move(c));
        }
        equations.push_back(std::move(terms));
    }

    // Admissible values per unknown (bounds plus power conditions).
    std::vector<std::vector<std::int64_t>> values(unknowns.size());
    for (std::size_t i = 0; i < unknowns.size(); ++i)
        for (std::int64_t v = *unknowns[i].min; v <= *unknowns[i].max; ++v)
            if (std::all_of(unknowns[i].power_of.begin(), unknowns[i].power_of.end(),
                            [&](std::int64_t p) { return is_power_of(v, p); }))
                values[i].push_back(v);

    FeasibilityResult result;
    const bool any_empty = std::any_of(values.begin(), values.end(), [](const auto& v) { return v.empty(); });
    if (!any_empty) {
        std::vector<std::size_t> idx(unknowns.size(), 0);
        std::vector<std::int64_t> x(unknowns.size());
        while (true) {
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = values[i][idx[i]];
            ++result.candidates;
            const bool ok = std::all_of(equations.begin(), equations.end(),
                                        [&](const auto& eq) { return evaluate(eq, x) == 0; });
            if (ok) {
                CountingSolution s;
                for (std::size_t i = 0; i < x.size(); ++i) s[unknowns[i].name] = x[i];
                result.solutions.push_back(std::move(s));
            }
            // Last unknown varies fastest: solutions come out lexicographically.
            std::size_t j = idx.size();
            while (j > 0 && ++idx[j - 1] == values[j - 1].size()) idx[--j] = 0;
            if (j == 0) break;
        }
    }
    result.feasible = !result.solutions.empty();
    if (result.feasible) return result;

    for (std::size_t e = 0; e < equations.size() && result.witness.empty(); ++e)
        for (std::size_t i = 0; i < unknowns.size(); ++i)
            if (auto w = single_unknown_witness(constraint.equations[e], unknowns[i], equations[e], i)) {
                result.witness = *w;
                break;
            }
    if (result.witness.empty())
        result.witness = "exhaustive search over " + std::to_string(result.candidates) +
                         " admissible assignments found no solution";
    return result;
}

} // namespace kummer
