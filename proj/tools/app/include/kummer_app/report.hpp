#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kummer/exactalg/polynomial.hpp"

namespace kummer::app {

enum class Mode { Integral, Analytic, Ledger };
enum class Format { Text, Json };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

struct JobSpec {
    Mode mode = Mode::Integral;
    std::string catalog;                  // exactly one of catalog / input
    std::string input;
    std::optional<unsigned> d;
    std::optional<std::int64_t> oracle;   // torsion level N
    bool equivariant = false;
    Format format = Format::Text;
    std::size_t max_group_order = 10000;
    std::int64_t max_enumeration = 10'000'000;
};

/// One comparison; both sides are kept for the reader.
struct Check {
    std::string name;
    bool passed = false;
    std::string expected;
    std::string actual;
    friend bool operator==(const Check&, const Check&) = default;
};

/// Strata of one isotropy class, summed.
struct ClassRow {
    std::size_t isotropy_class = 0;
    std::size_t isotropy_order = 0;
    std::size_t dimension = 0;
    std::size_t components = 0;           // in the quotient
    std::size_t components_upstairs = 0;  // on the torus
    std::size_t weyl_order = 0;
    IntPolynomial fiber;
    IntPolynomial open_virtual;
    IntPolynomial open_weighted;
    friend bool operator==(const ClassRow&, const ClassRow&) = default;
};

/// One component orbit, with its Weyl-equivariant fiber.
struct StratumDetail {
    std::size_t isotropy_class = 0;
    std::size_t dimension = 0;
    std::size_t orbit_size = 0;
    std::size_t stabilizer_order = 0;
    std::size_t weyl_order = 0;
    std::size_t deeper = 0;
    std::string equivariant_fiber;
    IntPolynomial closure_quotient;
    IntPolynomial open_virtual;
    IntPolynomial open_weighted;
    friend bool operator==(const StratumDetail&, const StratumDetail&) = default;
};

struct AnalyticRow {
    std::size_t class_index = 0;
    std::size_t element_order = 0;
    std::size_t class_size = 0;
    std::string exponents;
    std::size_t codimension = 0;
    bool isolated = false;
    std::int64_t fixed_points = 0;
    friend bool operator==(const AnalyticRow&, const AnalyticRow&) = default;
};

struct ConstraintOutcome {
    std::string label;
    std::string equations;
    bool feasible = false;
    std::vector<std::map<std::string, std::int64_t>> solutions;
    std::string witness;
    friend bool operator==(const ConstraintOutcome&, const ConstraintOutcome&) = default;
};

struct SymbolicResult {
    std::string parameter;
    IntPolynomial constant;
    IntPolynomial linear;
    std::optional<std::int64_t> value;
    friend bool operator==(const SymbolicResult&, const SymbolicResult&) = default;
};

struct Report {
    static constexpr int current_version = 1;
    int report_version = current_version;
    Mode mode = Mode::Integral;
    std::string source;
    std::string label;
    std::optional<unsigned> d;
    std::optional<std::int64_t> oracle;
    bool equivariant = false;
    std::size_t group_order = 0;
    std::size_t rank = 0;

    std::optional<IntPolynomial> quotient;
    std::optional<IntPolynomial> resolution;
    std::vector<ClassRow> strata;
    std::vector<StratumDetail> strata_detail;
    std::optional<SymbolicResult> symbolic;

    std::vector<AnalyticRow> analytic;
    std::optional<bool> reflection_generated;
    std::optional<std::string> bls;
    std::vector<ConstraintOutcome> constraints;

    std::vector<Check> checks;
    std::vector<std::string> hypotheses;

    bool all_passed() const;
    friend bool operator==(const Report&, const Report&) = default;
};

} // namespace kummer::app
