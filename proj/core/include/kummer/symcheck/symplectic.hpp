#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kummer/symcheck/analytic.hpp"

namespace kummer {

struct ReflectionGeneration {
    bool generated = false;
    std::vector<std::size_t> reflections;    // elements fixing a codimension-2 subspace
    std::size_t generated_order = 0;         // order of the subgroup they generate
};

ReflectionGeneration symplectic_reflection_generated(const AnalyticEigenData& data);

struct ClassCodimension {
    std::size_t class_index = 0;
    std::size_t representative = 0;
    std::size_t element_order = 0;
    std::size_t codimension = 0;             // of the fixed subspace, complex
    bool isolated = false;
    std::int64_t fixed_points = 0;           // when isolated
};

struct PurityReport {
    std::vector<ClassCodimension> classes;   // non-identity classes only
    bool all_codim_two = true;               // every non-identity class has codimension <= 2
};

PurityReport codim2_purity_report(const AnalyticEigenData& data);

struct BlsMatch {
    enum class Kind { TypeA, TypeBC, BinaryTetrahedral, NoMatch };
    Kind kind = Kind::NoMatch;
    unsigned n = 0;
    unsigned m = 0;
    std::string to_string() const;
    friend bool operator==(const BlsMatch&, const BlsMatch&) = default;
};

/// Fingerprint match against the symmetric, wreath and binary tetrahedral
/// families. Throws ShapeMismatch unless every class is self-conjugate with an
/// even total dimension.
BlsMatch bls_classify(const AnalyticEigenData& data);

} // namespace kummer
