#include <gtest/gtest.h>

#include "kummer/exactalg/cyclotomic.hpp"
#include "kummer/groupcore/catalog.hpp"
#include "kummer/repring/class_function.hpp"
#include "kummer/repring/molien.hpp"
#include "support.hpp"

namespace kummer {
namespace {

TEST(Mu0, Examples) {
    const auto g = catalog_action("octahedral_s4_sl3");
    const auto group = g.shared_group();
    EXPECT_EQ(mu0(ClassFunction::trivial(group)), 1);
    EXPECT_EQ(mu0(ClassFunction::regular(group)), 1);
    const auto character = ClassFunction::from_elements(group, [&](std::size_t e) { return g.matrix(e).trace(); });
    EXPECT_EQ(mu0(character), 0);
    // |chi|^2 averages to 1 for an irreducible character.
    EXPECT_EQ(mu0(character * character), 1);
}

TEST(Mu0, RejectsNonCharacters) {
    const auto group = catalog_action("z6_sl2").shared_group();
    std::vector<std::int64_t> values(group->conjugacy_classes().size(), 0);
    values.front() = 1;
    EXPECT_KUMMER_ERROR(mu0(ClassFunction(group, values)), ErrorCode::NonIntegralInvariant);
}

TEST(TorusPolynomial, Examples) {
    const auto trivial = IntegralAction::generate({IntMatrix::identity(1)}, 1);
    EXPECT_EQ(torus_equivariant_polynomial(trivial).underlying(), (IntPolynomial{1, 2, 1}));

    const auto z6 = catalog_action("z6_sl2");
    const std::size_t gen = z6.index_of(IntMatrix{{0, -1}, {1, 1}});
    EXPECT_EQ(det_one_plus_t(z6.matrix(gen)), (IntPolynomial{1, 1, 1}));
    EXPECT_EQ(torus_equivariant_polynomial(z6)(gen), IntPolynomial({1, 1, 1}).pow(2));
}

TEST(QuotientPoincare, Examples) {
    EXPECT_EQ(quotient_poincare(catalog_action("octahedral_s4_sl3")), (IntPolynomial{1, 0, 1, 4, 1, 0, 1}));
    EXPECT_EQ(quotient_poincare(catalog_action("standard_s4_d2")),
              (IntPolynomial{1, 0, 6, 4, 22, 24, 62, 24, 22, 4, 6, 0, 1}));
    EXPECT_EQ(quotient_poincare(catalog_action("d8_b2")), (IntPolynomial{1, 0, 6, 0, 22, 0, 6, 0, 1}));
}

TEST(QuotientPoincare, MatchesBruteForceAverage) {
    for (const auto& name : testing::special_catalog()) {
        const auto action = catalog_action(name);
        EXPECT_EQ(quotient_poincare(action), testing::to_poly(oracle::molien(testing::oracle_group(action), action.d())))
            << name;
    }
}

TEST(ProductInvariants, SignCharacterExamples) {
    // W = Z_2 through <-I>; the non-identity class is the sign character e.
    const auto w = catalog_action("z2_sl2").shared_group();
    auto sign_poly = [&](IntPolynomial plain, IntPolynomial twisted) {
        return EquivariantPolynomial(w, {std::move(plain), std::move(twisted)});
    };
    const auto odd = sign_poly(IntPolynomial{1, 1}.pow(4), IntPolynomial{1, -1}.pow(4));  // (1 + e t)^4
    const auto fiber = sign_poly(IntPolynomial{1, 0, 2, 0, 1}, IntPolynomial{1, 0, 0, 0, 1});  // 1 + (1+e)t^2 + t^4
    const std::vector<EquivariantPolynomial> one{odd};
    EXPECT_EQ(equivariant_product_invariants(one), (IntPolynomial{1, 0, 6, 0, 1}));
    const std::vector<EquivariantPolynomial> two{odd, fiber};
    EXPECT_EQ(equivariant_product_invariants(two), (IntPolynomial{1, 0, 7, 4, 8, 4, 7, 0, 1}));
}

TEST(ProductInvariants, TrivialGroupIsPlainProduct) {
    const auto w = IntegralAction::generate({IntMatrix::identity(1)}, 1).shared_group();
    const std::vector<EquivariantPolynomial> factors{EquivariantPolynomial::constant(w, IntPolynomial{1, 2}),
                                                     EquivariantPolynomial::constant(w, IntPolynomial{3, 0, 1})};
    EXPECT_EQ(equivariant_product_invariants(factors), (IntPolynomial{1, 2} * IntPolynomial{3, 0, 1}));
}

TEST(ProductInvariants, GroupMismatch) {
    const auto a = catalog_action("z2_sl2").shared_group();
    const auto b = catalog_action("z3_sl2").shared_group();
    const std::vector<EquivariantPolynomial> factors{EquivariantPolynomial::constant(a, IntPolynomial{1}),
                                                     EquivariantPolynomial::constant(b, IntPolynomial{1})};
    EXPECT_KUMMER_ERROR(equivariant_product_invariants(factors), ErrorCode::GroupMismatch);
}

}  // namespace
}  // namespace kummer
