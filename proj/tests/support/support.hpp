#pragma once

#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "kummer/error.hpp"
#include "kummer/exactalg/int_matrix.hpp"
#include "kummer/exactalg/polynomial.hpp"
#include "kummer/groupcore/catalog.hpp"
#include "kummer/groupcore/integral_action.hpp"
#include "oracles.hpp"

namespace kummer {

/// Readable gtest diagnostics.
inline void PrintTo(const IntPolynomial& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace kummer

namespace kummer::testing {

/// Catalog actions in SL(r, Z) whose quotients have crepant resolutions.
inline const std::vector<std::string>& special_catalog() {
    static const std::vector<std::string> names{
        "z2_sl2", "z3_sl2", "z4_sl2", "z6_sl2", "d4_sl3", "octahedral_s4_sl3",
        "s3_standard_d2", "d8_b2", "standard_s4_d2"};
    return names;
}

/// The five worked cases.
inline const std::vector<std::string>& headline_catalog() {
    static const std::vector<std::string> names{"z6_sl2", "octahedral_s4_sl3", "standard_s4_d2",
                                                "s3_standard_d2", "d8_b2"};
    return names;
}

inline oracle::Mat to_oracle(const IntMatrix& m) { return m.to_rows(); }

inline std::set<oracle::Mat> oracle_group(const IntegralAction& action) {
    std::vector<oracle::Mat> gens;
    for (const auto& g : action.generator_matrices()) gens.push_back(to_oracle(g));
    return oracle::closure(gens);
}

inline IntPolynomial to_poly(const oracle::Poly& p) { return IntPolynomial(p); }

/// Matrix of a permutation of {0..n-1} on the basis e_i - e_0 (i = 1..n-1)
/// of the sum-zero lattice.
inline IntMatrix standard_permutation_matrix(const std::vector<unsigned>& perm) {
    const std::size_t r = perm.size() - 1;
    IntMatrix m(r, r, 0);
    for (std::size_t i = 1; i <= r; ++i) {
        // sigma(e_i - e_0) = e_{sigma i} - e_{sigma 0}
        if (perm[i] != 0) m(perm[i] - 1, i - 1) += 1;
        if (perm[0] != 0) m(perm[0] - 1, i - 1) -= 1;
    }
    return m;
}

/// Permutation action of S_3 on A^3 with one copy; transpositions have age 1/2.
inline IntegralAction non_gorenstein_s3() {
    return IntegralAction::generate(natural_sn(3).generator_matrices(), 1, {.cap = 100, .special = false});
}

}  // namespace kummer::testing

/// Asserts that `statement` throws kummer::Error with the given code.
#define EXPECT_KUMMER_ERROR(statement, error_code)                                   \
    do {                                                                           \
        try {                                                                      \
            statement;                                                             \
            ADD_FAILURE() << "expected " << ::kummer::to_string(error_code);        \
        } catch (const ::kummer::Error& e) {                                       \
            EXPECT_EQ(e.code(), error_code) << e.what();                           \
        }                                                                          \
    } while (false)
