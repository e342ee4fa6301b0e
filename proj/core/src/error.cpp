#include "kummer/error.hpp"

namespace kummer {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NonInvertible: return "NonInvertible";
    case ErrorCode::NotFiniteWithinCap: return "NotFiniteWithinCap";
    case ErrorCode::SpecialityViolation: return "SpecialityViolation";
    case ErrorCode::NotNormalizer: return "NotNormalizer";
    case ErrorCode::UnknownCatalogEntry: return "UnknownCatalogEntry";
    case ErrorCode::NotProductOfCyclotomics: return "NotProductOfCyclotomics";
    case ErrorCode::NonIntegralInvariant: return "NonIntegralInvariant";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotIsolated: return "NotIsolated";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::NonIntegerAge: return "NonIntegerAge";
    case ErrorCode::MalformedLedger: return "MalformedLedger";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::UnboundedSearch: return "UnboundedSearch";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

} // namespace kummer
