#include <cstdint>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "kummer/exactalg/cyclotomic.hpp"
#include "kummer/exactalg/int_matrix.hpp"
#include "kummer/exactalg/polynomial.hpp"
#include "kummer/exactalg/smith.hpp"
#include "kummer/groupcore/catalog.hpp"
#include "support.hpp"

namespace kummer {
namespace {

using testing::standard_permutation_matrix;

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

TEST(Polynomial, ArithmeticAndShape) {
    const IntPolynomial p{1, 0, 4, 0, 1};
    EXPECT_EQ(p.degree(), 4);
    EXPECT_TRUE(p.is_palindromic());
    EXPECT_EQ(p.to_string(), "1 + 4t^2 + t^4");
    EXPECT_EQ(p.evaluate(-1), 6);
    EXPECT_EQ((IntPolynomial{1, 1} * IntPolynomial{1, -1}), (IntPolynomial{1, 0, -1}));
    EXPECT_EQ(IntPolynomial({1, 1}).pow(4), (IntPolynomial{1, 4, 6, 4, 1}));
    EXPECT_EQ(IntPolynomial({1, 2}).reflect_sign(), (IntPolynomial{1, -2}));
    EXPECT_FALSE(IntPolynomial({1, 2}).is_palindromic());
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(IntPolynomial().degree(), -1);
}

TEST(Polynomial, ExactDivision) {
    EXPECT_EQ(IntPolynomial({6, 12}).divide_exact(6), (IntPolynomial{1, 2}));
    EXPECT_KUMMER_ERROR(IntPolynomial({6, 13}).divide_exact(6), ErrorCode::NonIntegralInvariant);
    const auto [q, r] = IntPolynomial({-1, 0, 0, 0, 1}).divmod_monic(IntPolynomial{1, 1});
    EXPECT_EQ(q, (IntPolynomial{-1, 1, -1, 1}));
    EXPECT_TRUE(r.is_zero());
}

TEST(Polynomial, OverflowIsReported) {
    const IntPolynomial big = IntPolynomial::constant(std::numeric_limits<std::int64_t>::max() / 2 + 1);
    EXPECT_KUMMER_ERROR(big * IntPolynomial::constant(2), ErrorCode::Overflow);
}

TEST(IntMatrix, DeterminantMatchesCofactorExpansion) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const IntMatrix m = random_matrix(rng, n, n, 4);
        EXPECT_EQ(m.determinant(), oracle::det_cofactor(m.to_rows())) << m.to_string();
    }
}

TEST(IntMatrix, UnimodularInverse) {
    const IntMatrix m{{2, 1}, {1, 1}};
    EXPECT_TRUE((m * unimodular_inverse(m)).is_identity());
    EXPECT_KUMMER_ERROR(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), ErrorCode::NonInvertible);
}

TEST(CharPoly, Examples) {
    EXPECT_EQ(char_poly(IntMatrix{{0, -1}, {1, 1}}), (IntPolynomial{1, -1, 1}));
    EXPECT_EQ(char_poly(IntMatrix::identity(3)), (IntPolynomial{-1, 3, -3, 1}));
    const IntMatrix four_cycle = standard_permutation_matrix({1, 2, 3, 0});
    EXPECT_EQ(char_poly(four_cycle), (IntPolynomial{1, 1, 1, 1}));
}

TEST(CharPoly, AgreesWithDeterminantOfShiftedMatrix) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const IntMatrix m = random_matrix(rng, n, n, 3);
        const IntPolynomial p = char_poly(m);
        for (std::int64_t x = -3; x <= 3; ++x) {
            oracle::Mat shifted = m.to_rows();
            for (std::size_t i = 0; i < n; ++i) {
                for (auto& v : shifted[i]) v = -v;
                shifted[i][i] += x;
            }
            EXPECT_EQ(p.evaluate(x), oracle::det_cofactor(shifted));
        }
    }
}

TEST(CharPoly, GradedTraceMatchesInterpolation) {
    for (const auto& name : testing::special_catalog()) {
        const auto action = catalog_action(name);
        for (const auto& g : action.matrices())
            EXPECT_EQ(det_one_plus_t(g), testing::to_poly(oracle::det_one_plus_t(g.to_rows()))) << name;
    }
}

TEST(Cyclotomic, PolynomialsMatchRepeatedDivision) {
    for (unsigned k = 1; k <= 30; ++k) {
        EXPECT_EQ(cyclotomic_polynomial(k), testing::to_poly(oracle::cyclotomic(k))) << k;
        EXPECT_EQ(cyclotomic_polynomial(k).degree(), static_cast<int>(euler_phi(k)));
    }
}

TEST(Cyclotomic, Factorisation) {
    using F = std::vector<CyclotomicFactor>;
    EXPECT_EQ(cyclotomic_factor(IntPolynomial{1, -1, 1}), (F{{6, 1}}));
    EXPECT_EQ(cyclotomic_factor(IntPolynomial{-1, 3, -3, 1}), (F{{1, 3}}));
    EXPECT_EQ(cyclotomic_factor(IntPolynomial{1, 1, 1, 1}), (F{{2, 1}, {4, 1}}));
    EXPECT_KUMMER_ERROR(cyclotomic_factor(IntPolynomial{-2, 0, 1}), ErrorCode::NotProductOfCyclotomics);
}

TEST(Exponents, Examples) {
    EXPECT_EQ(exponent_multiset(IntMatrix{{0, -1}, {1, 1}}),
              ExponentMultiset({Rational(1, 6), Rational(5, 6)}));
    EXPECT_EQ(exponent_multiset(IntMatrix::identity(3)), ExponentMultiset({0, 0, 0}));
    EXPECT_EQ(exponent_multiset(IntMatrix{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}),
              ExponentMultiset({0, Rational(1, 2), Rational(1, 2)}));
}

TEST(Exponents, Age) {
    EXPECT_EQ(age(exponent_multiset(IntMatrix::identity(2)), 3), Rational(0));
    EXPECT_EQ(age(exponent_multiset(IntMatrix{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}), 1), Rational(1));
    const IntMatrix transposition = standard_permutation_matrix({1, 0, 2, 3});
    const IntMatrix four_cycle = standard_permutation_matrix({1, 2, 3, 0});
    EXPECT_EQ(age(exponent_multiset(transposition), 2), Rational(1));
    EXPECT_EQ(age(exponent_multiset(four_cycle), 2), Rational(3));
}

TEST(Exponents, AgeMatchesKernelDimensionOracle) {
    for (const auto& name : testing::special_catalog()) {
        const auto action = catalog_action(name);
        for (const auto& g : action.matrices()) {
            const Rational a = age(exponent_multiset(g), action.d());
            const oracle::Q expected = oracle::age(g.to_rows(), action.d());
            EXPECT_EQ(a.numerator(), expected.numerator()) << name << " " << g.to_string();
            EXPECT_EQ(a.denominator(), expected.denominator());
        }
    }
}

TEST(Smith, Examples) {
    using V = std::vector<std::int64_t>;
    EXPECT_EQ(smith_normal_form(IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 0}}).divisors(), (V{2, 2, 0}));
    const IntMatrix three_cycle{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    EXPECT_EQ(smith_normal_form(IntMatrix::identity(3) - three_cycle).divisors(), (V{1, 1, 0}));
    const IntMatrix order_three{{-1, -1}, {1, 0}};
    EXPECT_EQ(smith_normal_form(IntMatrix::identity(2) - order_three).divisors(), (V{1, 3}));
}

TEST(Smith, DecompositionIsValid) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + trial % 4;
        const std::size_t cols = 1 + (trial / 4) % 4;
        const IntMatrix m = random_matrix(rng, rows, cols, 5);
        const SmithDecomposition s = smith_normal_form(m);
        EXPECT_EQ(s.U * m * s.V, s.D);
        EXPECT_EQ(std::abs(s.U.determinant()), 1);
        EXPECT_EQ(std::abs(s.V.determinant()), 1);
        const auto d = s.divisors();
        for (std::size_t i = 0; i < d.size(); ++i) {
            EXPECT_GE(d[i], 0);
            if (i + 1 == d.size()) continue;
            if (d[i] != 0) {
                EXPECT_EQ(d[i + 1] % d[i], 0);
            } else {
                EXPECT_EQ(d[i + 1], 0);
            }
        }
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                if (i != j) {
                    EXPECT_EQ(s.D(i, j), 0);
                }
            }
        if (rows == cols) {
            EXPECT_EQ(s.nonzero_product() * (s.rank() == rows ? 1 : 0), std::abs(m.determinant()));
        }
    }
}

TEST(Hermite, CanonicalForRowLattice) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix m = random_matrix(rng, 3, 4, 4);
        const HermiteDecomposition h = hermite_normal_form(m);
        EXPECT_EQ(h.Q * m, h.H);
        EXPECT_EQ(std::abs(h.Q.determinant()), 1);
        // Same lattice, different generators: same form.
        IntMatrix shuffled = m;
        shuffled.add_row_multiple(0, 1, 3);
        shuffled.swap_rows(1, 2);
        shuffled.negate_row(2);
        EXPECT_EQ(hermite_normal_form(shuffled).H, h.H);
    }
}

TEST(Kernel, IsSaturatedAndAnnihilated) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix m = random_matrix(rng, 2, 4, 3);
        const IntMatrix k = integer_kernel(m);
        const std::size_t rank = smith_normal_form(m).rank();
        EXPECT_EQ(k.cols(), 4 - rank);
        if (k.cols() == 0) continue;
        EXPECT_TRUE((m * k).data().size() == 0 ||
                    std::all_of((m * k).data().begin(), (m * k).data().end(), [](auto v) { return v == 0; }));
        // Saturated: all non-zero Smith divisors of the basis are 1.
        for (auto d : smith_normal_form(k).divisors()) EXPECT_EQ(d, 1);
    }
}

}  // namespace
}  // namespace kummer
