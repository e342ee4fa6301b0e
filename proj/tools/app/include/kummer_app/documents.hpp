#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "kummer/groupcore/integral_action.hpp"
#include "kummer/strata/ledger.hpp"
#include "kummer/symcheck/analytic.hpp"
#include "kummer/symcheck/counting.hpp"

namespace kummer::app {

using Json = nlohmann::ordered_json;

/// What a constraint document says its outcome should be.
struct ConstraintExpectation {
    std::optional<bool> feasible;
    std::optional<std::vector<CountingSolution>> solutions;
};

struct ConstraintDocument {
    CountingConstraint constraint;
    ConstraintExpectation expect;
};

struct AnalyticExpectation {
    std::vector<std::pair<std::size_t, std::int64_t>> fixed_points_by_order;
    std::optional<std::string> bls;
};

struct AnalyticDocument {
    AnalyticEigenData data;
    std::vector<ConstraintDocument> constraints;
    AnalyticExpectation expect;
};

struct LedgerExpectation {
    std::optional<IntPolynomial> polynomial;
    std::optional<IntPolynomial> constant;
    std::optional<IntPolynomial> linear;
};

struct LedgerDocument {
    Ledger ledger;
    std::vector<ConstraintDocument> constraints;
    LedgerExpectation expect;
};

Json read_json_file(const std::string& path);

/// {name, matrices, d, special}; `d` overrides the document. Throws InvalidInput.
IntegralAction parse_group_spec(const Json& doc, std::optional<unsigned> d, std::size_t cap);
AnalyticDocument parse_analytic(const Json& doc, std::size_t cap);
/// Throws MalformedLedger.
LedgerDocument parse_ledger(const Json& doc);
ConstraintDocument parse_constraint(const Json& doc);

/// Integers or [num, den] pairs.
Rational parse_rational(const Json& value);
IntPolynomial parse_polynomial(const Json& value);
Json polynomial_json(const IntPolynomial& p);

/// The built-in constraint for the binary tetrahedral analytic entry.
ConstraintDocument binary_tetrahedral_obstruction();

} // namespace kummer::app
