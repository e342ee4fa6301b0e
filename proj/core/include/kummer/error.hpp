#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kummer {

enum class ErrorCode {
    NonInvertible,
    NotFiniteWithinCap,
    SpecialityViolation,
    NotNormalizer,
    UnknownCatalogEntry,
    NotProductOfCyclotomics,
    NonIntegralInvariant,
    GroupMismatch,
    NotIsolated,
    EnumerationTooLarge,
    NonIntegerAge,
    MalformedLedger,
    ShapeMismatch,
    UnboundedSearch,
    InvalidInput,
    Overflow,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace kummer
