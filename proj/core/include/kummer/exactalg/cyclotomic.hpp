#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kummer/exactalg/int_matrix.hpp"
#include "kummer/exactalg/polynomial.hpp"
#include "kummer/exactalg/rational.hpp"

namespace kummer {

/// det(xI - M), monic of degree rows(M). Faddeev-LeVerrier; all divisions are exact.
IntPolynomial char_poly(const IntMatrix& m);

/// det(I + t M), the graded trace of M on the exterior algebra.
IntPolynomial det_one_plus_t(const IntMatrix& m);

/// The k-th cyclotomic polynomial, by exact division of x^k - 1. Cached per process.
const IntPolynomial& cyclotomic_polynomial(unsigned k);

/// Euler's totient.
unsigned euler_phi(unsigned k);

struct CyclotomicFactor {
    unsigned order = 0;        // k in Phi_k
    unsigned multiplicity = 0;
    friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

/// Writes a monic integer polynomial as a product of cyclotomic polynomials,
/// ordered by increasing k. Throws NotProductOfCyclotomics otherwise.
std::vector<CyclotomicFactor> cyclotomic_factor(const IntPolynomial& p);

/// Eigenvalues e^{2 pi i a} of a finite-order operator, stored as the
/// exponents a in [0, 1). Sorted ascending.
class ExponentMultiset {
public:
    ExponentMultiset() = default;
    explicit ExponentMultiset(std::vector<Rational> entries);

    /// Every primitive k-th root once per multiplicity of Phi_k.
    static ExponentMultiset from_factors(const std::vector<CyclotomicFactor>& factors);

    const std::vector<Rational>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    /// Least common denominator; 1 for the empty or all-zero multiset.
    std::int64_t order() const;
    /// Multiplicity of the eigenvalue 1.
    std::size_t zero_count() const;
    Rational sum() const;

    /// a -> 1 - a (complex conjugate eigenvalues).
    ExponentMultiset conjugate() const;
    /// Multiset union.
    ExponentMultiset operator+(const ExponentMultiset& o) const;
    /// `copies` copies of this multiset.
    ExponentMultiset repeated(unsigned copies) const;

    /// Multiplicities of Phi_k; throws ShapeMismatch when not Galois-closed.
    std::vector<CyclotomicFactor> factors() const;
    bool is_galois_closed() const;
    bool is_self_conjugate() const { return conjugate() == *this; }

    std::string to_string() const;

    friend bool operator==(const ExponentMultiset&, const ExponentMultiset&) = default;

private:
    std::vector<Rational> entries_;
};

/// Exact eigenvalue exponents of a finite-order integer matrix.
ExponentMultiset exponent_multiset(const IntMatrix& m);

/// copies * (sum of exponents), representatives in [0, 1).
Rational age(const ExponentMultiset& e, unsigned copies = 1);

} // namespace kummer
