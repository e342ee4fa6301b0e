#include <map>

#include <gtest/gtest.h>

#include "kummer/groupcore/catalog.hpp"
#include "kummer/repring/molien.hpp"
#include "kummer/strata/ledger.hpp"
#include "kummer/strata/strata.hpp"
#include "support.hpp"

namespace kummer {
namespace {

TEST(Stratify, K3FromZ6) {
    const auto report = stratify(catalog_action("z6_sl2"));
    EXPECT_EQ(report.quotient, (IntPolynomial{1, 0, 4, 0, 1}));
    EXPECT_EQ(report.resolution, (IntPolynomial{1, 0, 22, 0, 1}));
    // Points with isotropy Z_6, Z_3, Z_2: 1, 4, 5 of them with fibers of rank 5, 2, 1.
    std::map<std::size_t, std::pair<std::size_t, IntPolynomial>> by_order;
    for (const auto& c : report.classes)
        if (c.dimension == 0) by_order[c.isotropy_order] = {c.components_downstairs, c.fiber};
    EXPECT_EQ(by_order[6], std::make_pair(std::size_t{1}, IntPolynomial{1, 0, 5}));
    EXPECT_EQ(by_order[3], std::make_pair(std::size_t{4}, IntPolynomial{1, 0, 2}));
    EXPECT_EQ(by_order[2], std::make_pair(std::size_t{5}, IntPolynomial{1, 0, 1}));
}

TEST(Stratify, OctahedralClassTable) {
    const auto report = stratify(catalog_action("octahedral_s4_sl3"));
    std::multimap<std::pair<std::size_t, std::size_t>, std::size_t> downstairs;
    for (const auto& c : report.classes) downstairs.emplace(std::make_pair(c.dimension, c.isotropy_order), c.components_downstairs);
    auto values = [&](std::size_t dim, std::size_t order) {
        std::multiset<std::size_t> out;
        auto [lo, hi] = downstairs.equal_range({dim, order});
        for (auto it = lo; it != hi; ++it) out.insert(it->second);
        return out;
    };
    EXPECT_EQ(values(1, 2), (std::multiset<std::size_t>{4, 6}));
    EXPECT_EQ(values(1, 3), std::multiset<std::size_t>{1});
    EXPECT_EQ(values(1, 4), std::multiset<std::size_t>{4});
    EXPECT_EQ(values(0, 4), std::multiset<std::size_t>{4});
    EXPECT_EQ(values(0, 8), std::multiset<std::size_t>{12});
    EXPECT_EQ(values(0, 24), std::multiset<std::size_t>{4});
    EXPECT_EQ(report.strata.front().dimension(), 3u);
    EXPECT_EQ(report.strata.front().isotropy.order(), 1u);
}

TEST(Stratify, StrataAreConsistent) {
    const auto action = catalog_action("octahedral_s4_sl3");
    const auto report = stratify(action);
    std::size_t previous_dim = report.strata.front().dimension();
    IntPolynomial weighted_total;
    for (const auto& s : report.strata) {
        EXPECT_LE(s.dimension(), previous_dim);
        previous_dim = s.dimension();
        EXPECT_TRUE(s.isotropy.is_subset_of(s.stabilizer));
        EXPECT_EQ(s.weyl.group->order() * s.isotropy.order(), s.stabilizer.order());
        EXPECT_EQ(s.orbit_size * s.stabilizer.order(), action.order());
        EXPECT_EQ(s.eta.size(), s.weyl.group->order());
        EXPECT_EQ(stratum_closure_quotient_poincare(s), molien_average(s.eta, action.d()));
        for (const auto& deeper : s.deeper) EXPECT_TRUE(s.representative.contains(deeper));
        // The weighted term factors only when W_K fixes every class of H.
        bool trivial_on_fiber = true;
        for (std::size_t w = 0; w < s.eta.size(); ++w)
            trivial_on_fiber = trivial_on_fiber && (*s.fiber.equivariant)(w) == s.fiber.plain;
        if (trivial_on_fiber) {
            EXPECT_EQ(open_stratum_weighted(s), open_stratum_virtual(s) * s.fiber.plain);
        }
        weighted_total += open_stratum_weighted(s);
    }
    EXPECT_EQ(weighted_total, report.resolution);
    for (const auto& [i, j] : report.closure_edges) EXPECT_LT(report.strata[i].dimension(), report.strata[j].dimension());
    EXPECT_EQ(report.resolution, assemble_resolution_poincare(action));
}

TEST(Stratify, NonGorensteinIsRejected) {
    EXPECT_KUMMER_ERROR(stratify(testing::non_gorenstein_s3()), ErrorCode::NonIntegerAge);
}

TEST(InducedLattice, SolvesTheIntertwiningEquation) {
    const IntMatrix cycle{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    const IntMatrix plane{{1, 0}, {-1, 1}, {0, -1}};  // sum-zero sublattice
    const IntMatrix x = induced_lattice_action(cycle, plane);
    EXPECT_EQ(cycle * plane, plane * x);
    EXPECT_EQ(x.determinant(), 1);
    EXPECT_EQ(x.trace(), -1);
    EXPECT_EQ(induced_lattice_action(cycle, IntMatrix(3, 0)).rows(), 0u);
}

TEST(Ledger, SymbolicD6) {
    Ledger ledger{"D6", "m", 1, {}};
    LedgerEntry free_part{"free", {1, 0}, MolienBase{"s3_standard", 2}, {{{0, 1}, IntPolynomial{1, 4, 6, 4, 1}}}, IntPolynomial{1}};
    LedgerEntry surfaces{"surfaces", {0, 1}, IntPolynomial{1, 4, 6, 4, 1}, {{{81, 0}, IntPolynomial{1}}}, IntPolynomial{1, 0, 1}};
    LedgerEntry points{"points", {81, 0}, IntPolynomial{1}, {}, IntPolynomial{1, 0, 1, 0, 1}};
    ledger.entries = {free_part, surfaces, points};
    const ParametricPolynomial p = assemble_symbolic(ledger);
    EXPECT_EQ(p.to_string("m"), "1 + (6+m)t^2 + (4+4m)t^3 + (102+6m)t^4 + (4+4m)t^5 + (6+m)t^6 + t^8");
    EXPECT_EQ(p.at(1), (IntPolynomial{1, 0, 7, 8, 108, 8, 7, 0, 1}));
    EXPECT_EQ(assemble_from_ledger(ledger), p.at(1));
}

TEST(Ledger, Errors) {
    EXPECT_TRUE(assemble_from_ledger(Ledger{}).is_zero());
    LedgerEntry symbolic{"x", {0, 1}, IntPolynomial{1}, {}, IntPolynomial{1}};
    EXPECT_KUMMER_ERROR(assemble_symbolic(Ledger{"no parameter", "", std::nullopt, {symbolic}}), ErrorCode::MalformedLedger);
    EXPECT_KUMMER_ERROR(assemble_from_ledger(Ledger{"no value", "n", std::nullopt, {symbolic}}), ErrorCode::MalformedLedger);
    LedgerEntry unknown{"y", {1, 0}, MolienBase{"not_a_group", 1}, {}, IntPolynomial{1}};
    EXPECT_KUMMER_ERROR(assemble_symbolic(Ledger{"bad base", "", std::nullopt, {unknown}}), ErrorCode::MalformedLedger);
    LedgerEntry no_fiber{"z", {1, 0}, IntPolynomial{1}, {}, IntPolynomial{}};
    EXPECT_KUMMER_ERROR(assemble_symbolic(Ledger{"zero fiber", "", std::nullopt, {no_fiber}}), ErrorCode::MalformedLedger);
}

}  // namespace
}  // namespace kummer
