#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <gtest/gtest.h>

#include "kummer/exactalg/cyclotomic.hpp"
#include "kummer/exactalg/smith.hpp"
#include "kummer/groupcore/catalog.hpp"
#include "kummer/groupcore/subgroup_poset.hpp"
#include "kummer/mckay/fiber.hpp"
#include "kummer/mckay/partitions.hpp"
#include "kummer/repring/molien.hpp"
#include "kummer/strata/strata.hpp"
#include "kummer/symcheck/analytic.hpp"
#include "kummer/symcheck/symplectic.hpp"
#include "kummer/toruslat/fixed_locus.hpp"
#include "support.hpp"

namespace kummer {
namespace {

using testing::special_catalog;

std::int64_t power(std::int64_t b, unsigned e) {
    std::int64_t out = 1;
    while (e--) out *= b;
    return out;
}

class EveryCrepantCase : public ::testing::TestWithParam<std::string> {
protected:
    /// Stratified once per case; the larger groups take seconds.
    static const StrataReport& strata(const std::string& name) {
        static std::map<std::string, StrataReport> cache;
        auto it = cache.find(name);
        if (it == cache.end()) it = cache.emplace(name, stratify(catalog_action(name))).first;
        return it->second;
    }
};

INSTANTIATE_TEST_SUITE_P(Catalog, EveryCrepantCase,
                         ::testing::Values("z2_sl2", "z3_sl2", "z4_sl2", "z6_sl2", "d4_sl3", "octahedral_s4_sl3",
                                           "s3_standard_d2", "d8_b2", "standard_s4_d2", "quotient_s3", "wreath_1_2",
                                           "standard_s5", "wreath_3_2"),
                         [](const auto& info) { return info.param; });

TEST_P(EveryCrepantCase, AssembledPolynomialShape) {
    const auto action = catalog_action(GetParam());
    const auto& report = strata(GetParam());
    const IntPolynomial& p = report.resolution;
    EXPECT_TRUE(p.is_palindromic()) << p.to_string();
    EXPECT_EQ(p.coeff(0), 1);
    EXPECT_EQ(p.coeff(1), 0);
    EXPECT_EQ(p.leading(), 1);
    EXPECT_EQ(p.degree(), static_cast<int>(2 * action.rank() * action.d()));
    for (auto c : p.coefficients()) EXPECT_GE(c, 0);
}

TEST_P(EveryCrepantCase, OpenStrataPartitionTheQuotient) {
    const auto action = catalog_action(GetParam());
    const auto& report = strata(GetParam());
    IntPolynomial sum;
    for (const auto& s : report.strata) sum += s.open_virtual;
    EXPECT_EQ(sum, quotient_poincare(action));
    EXPECT_EQ(report.quotient, sum);
}

TEST_P(EveryCrepantCase, OrbitAndFrobeniusPathsAgree) {
    const auto& report = strata(GetParam());
    EXPECT_EQ(report.resolution, report.resolution_frobenius);
}

TEST_P(EveryCrepantCase, EulerNumberMatchesOrbifoldSum) {
    const auto action = catalog_action(GetParam());
    EXPECT_EQ(strata(GetParam()).resolution.evaluate(-1), orbifold_euler(action));
}

TEST_P(EveryCrepantCase, ResolutionMatchesStringyOracle) {
    const auto action = catalog_action(GetParam());
    const auto expected = oracle::orbifold_poincare(testing::oracle_group(action), action.d());
    EXPECT_EQ(strata(GetParam()).resolution, testing::to_poly(expected));
}

TEST_P(EveryCrepantCase, WeylCharactersAreGenuine) {
    // Every coefficient of an equivariant fiber is a permutation character:
    // values bounded by the value at the identity, with a non-negative trivial part.
    const auto& report = strata(GetParam());
    for (const auto& s : report.strata) {
        ASSERT_TRUE(s.fiber.equivariant);
        const auto& eq = *s.fiber.equivariant;
        for (int i = 0; i <= eq.degree(); ++i) {
            const ClassFunction coefficient = eq.coefficient(static_cast<std::size_t>(i));
            EXPECT_GE(mu0(coefficient), 0);
            for (auto v : coefficient.values()) {
                EXPECT_GE(v, 0);
                EXPECT_LE(v, coefficient.at_class(0));
            }
        }
    }
}

TEST(Groups, ClassAndSubgroupCounting) {
    for (const auto& name : special_catalog()) {
        const auto action = catalog_action(name);
        const auto& g = action.group();
        std::size_t total = 0;
        for (const auto& c : g.conjugacy_classes()) {
            total += c.size();
            EXPECT_EQ(g.order() % c.size(), 0u);
            EXPECT_EQ(c.size() * g.centralizer(c.front()).order(), g.order());
        }
        EXPECT_EQ(total, g.order()) << name;
        const SubgroupClassPoset poset(g);
        for (const auto& c : poset.classes()) EXPECT_EQ(c.size() * c.normalizer.order(), g.order()) << name;
    }
}

TEST(Groups, StandardAndQuotientModelsAgree) {
    // Z^n / Z(1..1) is dual to the sum-zero lattice, so the characters coincide.
    for (unsigned n = 3; n <= 5; ++n) {
        const auto a = standard_sn(n);
        const auto b = quotient_sn(n);
        std::multiset<std::pair<std::size_t, std::int64_t>> ta, tb;
        for (std::size_t e = 0; e < a.order(); ++e) ta.emplace(a.group().element_order(e), a.matrix(e).trace());
        for (std::size_t e = 0; e < b.order(); ++e) tb.emplace(b.group().element_order(e), b.matrix(e).trace());
        EXPECT_EQ(ta, tb);
        EXPECT_EQ(quotient_poincare(a), quotient_poincare(b));
    }
}

TEST(Ages, ElementAndInverse) {
    for (const auto& name : special_catalog()) {
        const auto action = catalog_action(name);
        for (std::size_t e = 0; e < action.order(); ++e) {
            const auto exps = exponent_multiset(action.matrix(e));
            const auto nonzero = static_cast<std::int64_t>(exps.size() - exps.zero_count());
            EXPECT_EQ(element_age(action, e) + element_age(action, action.group().inverse(e)),
                      Rational(action.d() * nonzero))
                << name;
        }
    }
}

TEST(Molien, AveragesAreIntegralAndPalindromic) {
    for (const auto& name : special_catalog()) {
        const auto action = catalog_action(name);
        IntPolynomial sum;
        for (const auto& m : action.matrices()) sum += det_one_plus_t(m).pow(2 * action.d());
        for (auto c : sum.coefficients()) EXPECT_EQ(c % static_cast<std::int64_t>(action.order()), 0);
        const IntPolynomial q = quotient_poincare(action);
        EXPECT_TRUE(q.is_palindromic()) << name;
        EXPECT_EQ(q.coeff(1), 0) << name;
        EXPECT_EQ(q.coeff(0), 1);
    }
}

TEST(Mu0, Additivity) {
    const auto action = catalog_action("standard_s4_d2");
    const auto group = action.shared_group();
    const auto chi = ClassFunction::from_elements(group, [&](std::size_t e) { return action.matrix(e).trace(); });
    const auto triv = ClassFunction::trivial(group);
    const auto reg = ClassFunction::regular(group);
    EXPECT_EQ(mu0(chi + triv), mu0(chi) + mu0(triv));
    EXPECT_EQ(mu0(chi * reg), action.rank());  // chi(1)
    EXPECT_EQ(mu0(reg * reg), static_cast<std::int64_t>(action.order()));
    EXPECT_EQ(mu0(chi * chi), 1);
}

TEST(FixedLoci, OneDimensionalInSL3) {
    // Every non-identity element of a finite subgroup of SL(3, Z) has the eigenvalue 1 exactly once.
    for (const char* name : {"d4_sl3", "octahedral_s4_sl3"}) {
        const auto action = catalog_action(name);
        for (std::size_t e = 0; e < action.order(); ++e) {
            if (e == action.group().identity()) continue;
            EXPECT_EQ(exponent_multiset(action.matrix(e)).zero_count(), 1u) << name;
            EXPECT_EQ(fix_locus(action, e).lattice_rank, 1u);
        }
    }
}

TEST(FixedLoci, PartitionCountsForSymmetricGroups) {
    // sigma of cycle type lambda fixes gcd(lambda)^{2d} components of dimension d(l - 1).
    for (unsigned n = 3; n <= 5; ++n) {
        const auto action = standard_sn(n);
        for (const auto& lambda : partitions(n)) {
            const auto perm = permutation_with_cycle_type(lambda);
            const std::size_t e = action.index_of(testing::standard_permutation_matrix(perm));
            const PartitionData data = partition_data(lambda);
            EXPECT_EQ(component_count(action, e), power(data.gcd, 2 * action.d())) << n;
            const FixLocus fix = fix_locus(action, e);
            EXPECT_EQ(fix.lattice_rank, data.length - 1);
            EXPECT_EQ(static_cast<std::int64_t>(fix.components.size()), component_count(action, e));
        }
    }
}

TEST(FixedLoci, TorsionCountsFollowSmithDivisors) {
    for (const auto& name : special_catalog()) {
        const auto action = catalog_action(name);
        for (std::int64_t n : {2, 3, 4, 6}) {
            const auto counts = torsion_oracle(action, n);
            for (std::size_t e = 0; e < action.order(); ++e) {
                const IntMatrix fixing = IntMatrix::identity(action.rank()) - action.matrix(e);
                std::int64_t per_factor = 1;
                for (auto d : smith_normal_form(fixing).divisors()) per_factor *= std::gcd(d, n);
                EXPECT_EQ(counts[e], power(per_factor, 2 * action.d())) << name << " N=" << n;
                EXPECT_EQ(static_cast<std::int64_t>(oracle::torsion_solutions(fixing.to_rows(), n).size()), per_factor);
            }
        }
    }
}

TEST(Fibers, AgesReproducePartitionCounts) {
    for (unsigned n = 2; n <= 6; ++n) {
        const auto action = standard_sn(n);
        EXPECT_EQ(fiber_poincare(action, action.group().whole()).plain, partition_fiber(n)) << n;
    }
    EXPECT_EQ(partition_fiber(1), IntPolynomial{1});
}

TEST(Fibers, EulerNumberCountsClasses) {
    for (const auto& name : special_catalog()) {
        const auto action = catalog_action(name);
        const SubgroupClassPoset poset(action.group());
        for (const auto& c : poset.classes()) {
            const auto fiber = fiber_poincare(action, c.representative);
            EXPECT_EQ(fiber.plain.evaluate(1),
                      static_cast<std::int64_t>(action.group().classes_within(c.representative).size()));
            EXPECT_EQ(fiber.plain.coeff(0), 1);
        }
    }
}

TEST(Fibers, CyclicSurfaceSingularity) {
    for (const char* name : {"z2_sl2", "z3_sl2", "z4_sl2", "z6_sl2"}) {
        const auto action = catalog_action(name);
        const SubgroupClassPoset poset(action.group());
        for (const auto& c : poset.classes()) {
            const auto h = static_cast<std::int64_t>(c.representative.order());
            EXPECT_EQ(fiber_poincare(action, c.representative).plain, (IntPolynomial{1, 0, h - 1}));
        }
    }
}

TEST(Analytic, LefschetzMatchesIntegralCounts) {
    for (const auto& name : special_catalog()) {
        const auto action = catalog_action(name);
        const auto data = AnalyticEigenData::from_integral(action);
        const auto& g = action.group();
        for (std::size_t c = 0; c < g.conjugacy_classes().size(); ++c) {
            const std::size_t e = g.conjugacy_classes()[c].front();
            const LefschetzCount count = lefschetz_count(data, c);
            const std::int64_t det = (IntMatrix::identity(action.rank()) - action.matrix(e)).determinant();
            EXPECT_EQ(count.isolated, det != 0) << name;
            if (det == 0) continue;
            EXPECT_EQ(count.count, isolated_count(action, e)) << name;
            if (data.dimension() % 2 == 0) {
                const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(count.count))));
                EXPECT_EQ(root * root, count.count);
            }
        }
    }
}

TEST(Analytic, SymplecticReflectionGeneration) {
    for (const char* name : {"standard_s3", "standard_s4_d2", "d8_b2", "wreath_3_2"})
        EXPECT_TRUE(symplectic_reflection_generated(AnalyticEigenData::from_integral(catalog_action(name))).generated)
            << name;
    EXPECT_FALSE(symplectic_reflection_generated(AnalyticEigenData::from_integral(catalog_action("z2_sl2", 2))).generated);
}

}  // namespace
}  // namespace kummer
