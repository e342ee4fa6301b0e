#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kummer/exactalg/polynomial.hpp"

namespace kummer {

/// c + k * parameter.
struct AffineCount {
    std::int64_t constant = 0;
    std::int64_t coefficient = 0;
    friend bool operator==(const AffineCount&, const AffineCount&) = default;
};

/// Poincare polynomial of a catalog quotient, computed by Molien averaging.
struct MolienBase {
    std::string catalog;
    unsigned d = 1;
    friend bool operator==(const MolienBase&, const MolienBase&) = default;
};

struct LedgerSubtraction {
    AffineCount multiplicity;
    IntPolynomial polynomial;
    friend bool operator==(const LedgerSubtraction&, const LedgerSubtraction&) = default;
};

/// Contributes (count * base - sum multiplicity * polynomial) * fiber.
struct LedgerEntry {
    std::string label;
    AffineCount count{1, 0};
    std::variant<IntPolynomial, MolienBase> base;
    std::vector<LedgerSubtraction> subtract;
    IntPolynomial fiber = IntPolynomial::constant(1);
    friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

/// Hand-written stratum bookkeeping for actions known only analytically.
struct Ledger {
    std::string label;
    std::string parameter;                // empty when no entry is symbolic
    std::optional<std::int64_t> value;    // substitution for the parameter
    std::vector<LedgerEntry> entries;
    friend bool operator==(const Ledger&, const Ledger&) = default;
};

/// p0 + parameter * p1.
struct ParametricPolynomial {
    IntPolynomial constant;
    IntPolynomial linear;
    IntPolynomial at(std::int64_t value) const { return constant + value * linear; }
    /// Coefficients written as "a+bm" where they depend on the parameter.
    std::string to_string(const std::string& parameter) const;
    friend bool operator==(const ParametricPolynomial&, const ParametricPolynomial&) = default;
};

/// Exact symbolic sum. Throws MalformedLedger (e.g. a symbolic count with no
/// parameter name, or an unknown Molien catalog entry).
ParametricPolynomial assemble_symbolic(const Ledger& ledger);

/// Sum with the parameter substituted. Throws MalformedLedger when a symbolic
/// entry has no substitution. An empty ledger gives 0.
IntPolynomial assemble_from_ledger(const Ledger& ledger);

} // namespace kummer
