#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace kummer {

using Rational = boost::rational<std::int64_t>;

/// Representative of q modulo 1 in [0, 1).
inline Rational frac(const Rational& q) {
    std::int64_t n = q.numerator() % q.denominator();
    if (n < 0) n += q.denominator();
    return Rational(n, q.denominator());
}

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

} // namespace kummer
