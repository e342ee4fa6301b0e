#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kummer {

struct CountingUnknown {
    std::string name;
    std::optional<std::int64_t> min;
    std::optional<std::int64_t> max;
    /// The value must be a power (exponent >= 0) of every listed base.
    std::vector<std::int64_t> power_of;
};

/// coefficient * product of the named unknowns.
struct CountingTerm {
    std::int64_t coefficient = 0;
    std::vector<std::string> unknowns;
};

/// Sum of terms equal to zero.
struct CountingEquation {
    std::vector<CountingTerm> terms;
};

struct CountingConstraint {
    std::string label;
    std::vector<CountingUnknown> unknowns;
    std::vector<CountingEquation> equations;
};

using CountingSolution = std::map<std::string, std::int64_t>;

struct FeasibilityResult {
    bool feasible = false;
    std::vector<CountingSolution> solutions;  // all of them, lexicographic in declaration order
    std::string witness;                      // reason for emptiness when infeasible
    std::int64_t candidates = 0;              // points examined
};

/// Exhaustive search. Throws UnboundedSearch when an unknown lacks a bound,
/// EnumerationTooLarge past `budget` candidates, InvalidInput on unknown names.
FeasibilityResult counting_feasibility(const CountingConstraint& constraint, std::int64_t budget = 10'000'000);

/// Human-readable "3s + 192 = 0".
std::string describe_equation(const CountingEquation& equation);

} // namespace kummer
