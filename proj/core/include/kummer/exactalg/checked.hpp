#pragma once

#include <cstdint>
#include <numeric>

#include "kummer/error.hpp"

namespace kummer {

// All integer arithmetic in the library is exact; overflow is an error.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer addition");
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer subtraction");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer multiplication");
    return out;
}

inline std::int64_t checked_pow(std::int64_t base, unsigned exponent) {
    std::int64_t out = 1;
    for (unsigned i = 0; i < exponent; ++i) out = checked_mul(out, base);
    return out;
}

/// Floor division (rounds toward negative infinity).
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
    return a - floor_div(a, b) * b;
}

} // namespace kummer
