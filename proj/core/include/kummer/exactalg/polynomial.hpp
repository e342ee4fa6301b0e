#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kummer {

/// Polynomial in one formal variable with exact integer coefficients, stored
/// dense and low-to-high. The zero polynomial has no coefficients; otherwise
/// the highest stored coefficient is non-zero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coefficients);
    IntPolynomial(std::initializer_list<std::int64_t> coefficients);

    static IntPolynomial constant(std::int64_t c);
    static IntPolynomial monomial(std::int64_t c, std::size_t degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::span<const std::int64_t> coefficients() const noexcept { return coeffs_; }
    std::int64_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);
    IntPolynomial& operator*=(std::int64_t s);

    IntPolynomial pow(unsigned e) const;
    std::int64_t evaluate(std::int64_t x) const;
    /// Divides every coefficient by `d`; throws NonIntegralInvariant if some coefficient is not divisible.
    IntPolynomial divide_exact(std::int64_t d) const;
    /// Quotient and remainder by a monic divisor.
    std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& divisor) const;
    /// p(t) with t -> -t.
    IntPolynomial reflect_sign() const;

    /// t^deg p(1/t) == p(t).
    bool is_palindromic() const;

    /// Ascending human-readable form, e.g. "1 + 4t^2 + t^4".
    std::string to_string(char variable = 't') const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
    friend std::strong_ordering operator<=>(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b);
IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(std::int64_t s, IntPolynomial a);

} // namespace kummer
