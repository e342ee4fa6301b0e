#include "kummer/groupcore/catalog.hpp"

#include <array>
#include <charconv>

#include "kummer/error.hpp"

namespace kummer {

namespace {

IntegralAction build(const std::vector<IntMatrix>& gens, unsigned d, std::size_t cap, std::string label) {
    GenerateOptions opts;
    opts.cap = cap;
    opts.special = (d % 2 == 1);
    return IntegralAction::generate(gens, d, opts, std::move(label));
}

// e_i -> e_{p(i)} on Z^n.
IntMatrix permutation_matrix(const std::vector<unsigned>& p) {
    const std::size_t n = p.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(p[i], i) = 1;
    return m;
}

std::vector<std::vector<unsigned>> symmetric_generators(unsigned n) {
    std::vector<unsigned> swap01(n), cycle(n);
    for (unsigned i = 0; i < n; ++i) {
        swap01[i] = i;
        cycle[i] = (i + 1) % n;
    }
    if (n >= 2) std::swap(swap01[0], swap01[1]);
    return {swap01, cycle};
}

std::optional<unsigned> parse_suffix(std::string_view name, std::string_view prefix) {
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    const auto rest = name.substr(prefix.size());
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || value == 0) return std::nullopt;
    return value;
}

struct Fixed {
    const char* name;
    const char* description;
    CatalogEntry::Kind kind;
    unsigned default_d;
};

constexpr std::array<Fixed, 10> kFixed{{
    {"z2_sl2", "Z_2 = <-I> in SL(2,Z), Kummer surface", CatalogEntry::Kind::Integral, 1},
    {"z3_sl2", "Z_3 in SL(2,Z)", CatalogEntry::Kind::Integral, 1},
    {"z4_sl2", "Z_4 in SL(2,Z)", CatalogEntry::Kind::Integral, 1},
    {"z6_sl2", "Z_6 in SL(2,Z), K3 surface", CatalogEntry::Kind::Integral, 1},
    {"d4_sl3", "Klein four group of diagonal sign changes in SL(3,Z)", CatalogEntry::Kind::Integral, 1},
    {"octahedral_s4_sl3", "octahedral S_4 in SL(3,Z), Calabi-Yau threefold", CatalogEntry::Kind::Integral, 1},
    {"standard_s4_d2", "Beauville generalized Kummer, dim 6", CatalogEntry::Kind::Integral, 2},
    {"s3_standard_d2", "D_6 = S_3 standard representation on an abelian surface, dim 4", CatalogEntry::Kind::Integral, 2},
    {"d8_b2", "D_8 as signed 2x2 permutation matrices on an abelian surface, dim 4", CatalogEntry::Kind::Integral, 2},
    {"binary_tetrahedral", "obstruction data for the binary tetrahedral group on a 4-dimensional torus",
     CatalogEntry::Kind::Analytic, 1},
}};

// Alternative spellings accepted on input.
std::string_view canonical_name(std::string_view name) {
    if (name == "s4_standard_d2" || name == "standard_s4") return "standard_s4_d2";
    if (name == "s3_standard" || name == "d6_analytic" || name == "standard_s3") return "s3_standard_d2";
    if (name == "d8_analytic" || name == "wreath_2_2") return "d8_b2";
    return name;
}

} // namespace

std::vector<CatalogEntry> list_catalog(std::string_view filter) {
    std::vector<CatalogEntry> out;
    for (const auto& f : kFixed) {
        CatalogEntry e{f.name, f.description, f.kind, f.default_d};
        if (filter.empty() || e.name.find(filter) != std::string::npos) out.push_back(std::move(e));
    }
    const std::array<CatalogEntry, 4> parametric{{
        {"standard_sN", "S_N on the sum-zero sublattice of Z^N (rank N-1), d defaults to 2",
         CatalogEntry::Kind::Integral, 2},
        {"natural_sN", "S_N permuting the coordinates of Z^N", CatalogEntry::Kind::Integral, 2},
        {"quotient_sN", "S_N on Z^N modulo the diagonal (rank N-1)", CatalogEntry::Kind::Integral, 2},
        {"wreath_R_2", "signed R x R permutation matrices, order 2^R R!", CatalogEntry::Kind::Integral, 2},
    }};
    for (const auto& e : parametric)
        if (filter.empty() || e.name.find(filter) != std::string::npos) out.push_back(e);
    return out;
}

bool is_analytic_entry(std::string_view name) { return canonical_name(name) == "binary_tetrahedral"; }

IntegralAction catalog_action(std::string_view raw, std::optional<unsigned> d_override, std::size_t cap) {
    const std::string_view name = canonical_name(raw);
    auto d_or = [&](unsigned dflt) { return d_override.value_or(dflt); };
    const std::string label(name);

    if (name == "z2_sl2") return build({{{-1, 0}, {0, -1}}}, d_or(1), cap, label);
    if (name == "z3_sl2") return build({{{0, -1}, {1, -1}}}, d_or(1), cap, label);
    if (name == "z4_sl2") return build({{{0, -1}, {1, 0}}}, d_or(1), cap, label);
    if (name == "z6_sl2") return build({{{0, -1}, {1, 1}}}, d_or(1), cap, label);
    if (name == "d4_sl3")
        return build({{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}, {{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}}, d_or(1), cap,
                     label);
    if (name == "octahedral_s4_sl3")
        return build({{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}},
                      {{0, -1, 0}, {1, 0, 0}, {0, 0, 1}},
                      {{0, 1, 0}, {1, 0, 0}, {0, 0, -1}},
                      {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}},
                     d_or(1), cap, label);
    if (name == "standard_s4_d2") {
        auto a = standard_sn(4, d_or(2), cap);
        return IntegralAction::generate(a.generator_matrices(), a.d(), {cap, a.special()}, label);
    }
    if (name == "s3_standard_d2") {
        auto a = standard_sn(3, d_or(2), cap);
        return IntegralAction::generate(a.generator_matrices(), a.d(), {cap, a.special()}, label);
    }
    if (name == "d8_b2") {
        auto a = wreath(2, 2, d_or(2), cap);
        return IntegralAction::generate(a.generator_matrices(), a.d(), {cap, a.special()}, label);
    }
    if (auto n = parse_suffix(name, "standard_s")) return standard_sn(*n, d_or(2), cap);
    if (auto n = parse_suffix(name, "natural_s")) return natural_sn(*n, d_or(2), cap);
    if (auto n = parse_suffix(name, "quotient_s")) return quotient_sn(*n, d_or(2), cap);
    if (name.substr(0, 7) == "wreath_" && name.size() > 9 && name.substr(name.size() - 2) == "_2")
        if (auto r = parse_suffix(name.substr(0, name.size() - 2), "wreath_")) return wreath(*r, 2, d_or(2), cap);
    if (name == "binary_tetrahedral")
        throw Error(ErrorCode::UnknownCatalogEntry, "binary_tetrahedral has no integral model; use analytic mode");
    throw Error(ErrorCode::UnknownCatalogEntry, "no catalog entry named '" + std::string(raw) + "'");
}

AbstractGroup catalog_abstract(std::string_view name) {
    if (canonical_name(name) == "binary_tetrahedral") return binary_tetrahedral();
    throw Error(ErrorCode::UnknownCatalogEntry, "no analytic catalog entry named '" + std::string(name) + "'");
}

IntegralAction standard_sn(unsigned n, unsigned d, std::size_t cap) {
    if (n < 2) throw Error(ErrorCode::InvalidInput, "standard_sn needs n >= 2");
    const unsigned r = n - 1;
    std::vector<IntMatrix> gens;
    for (const auto& p : symmetric_generators(n)) {
        // f_i = e_i - e_0 maps to e_{p(i)} - e_{p(0)}, written in the f basis.
        IntMatrix m(r, r);
        for (unsigned i = 1; i < n; ++i) {
            std::vector<std::int64_t> v(n, 0);
            v[p[i]] += 1;
            v[p[0]] -= 1;
            for (unsigned j = 1; j < n; ++j) m(j - 1, i - 1) = v[j];
        }
        gens.push_back(std::move(m));
    }
    return build(gens, d, cap, "standard_s" + std::to_string(n));
}

IntegralAction natural_sn(unsigned n, unsigned d, std::size_t cap) {
    if (n < 2) throw Error(ErrorCode::InvalidInput, "natural_sn needs n >= 2");
    std::vector<IntMatrix> gens;
    for (const auto& p : symmetric_generators(n)) gens.push_back(permutation_matrix(p));
    return build(gens, d, cap, "natural_s" + std::to_string(n));
}

IntegralAction quotient_sn(unsigned n, unsigned d, std::size_t cap) {
    if (n < 2) throw Error(ErrorCode::InvalidInput, "quotient_sn needs n >= 2");
    const unsigned r = n - 1;
    std::vector<IntMatrix> gens;
    for (const auto& p : symmetric_generators(n)) {
        // In the quotient e_0 = -(e_1 + ... + e_{n-1}).
        IntMatrix m(r, r);
        for (unsigned i = 1; i < n; ++i) {
            if (p[i] != 0) {
                m(p[i] - 1, i - 1) += 1;
            } else {
                for (unsigned j = 0; j < r; ++j) m(j, i - 1) -= 1;
            }
        }
        gens.push_back(std::move(m));
    }
    return build(gens, d, cap, "quotient_s" + std::to_string(n));
}

IntegralAction wreath(unsigned r, unsigned m, unsigned d, std::size_t cap) {
    if (m != 2) throw Error(ErrorCode::InvalidInput, "only the signed-permutation model (m = 2) is integral");
    if (r == 0) throw Error(ErrorCode::InvalidInput, "wreath needs r >= 1");
    std::vector<IntMatrix> gens;
    IntMatrix sign = IntMatrix::identity(r);
    sign(0, 0) = -1;
    gens.push_back(sign);
    if (r >= 2)
        for (const auto& p : symmetric_generators(r)) gens.push_back(permutation_matrix(p));
    return build(gens, d, cap, "wreath_" + std::to_string(r) + "_2");
}

AbstractGroup binary_tetrahedral() {
    // Non-zero vectors (a, b) of F_3^2 in lexicographic order.
    std::vector<std::array<int, 2>> vectors;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != 0 || b != 0) vectors.push_back({a, b});
    auto as_permutation = [&](int m00, int m01, int m10, int m11) {
        Element p(vectors.size());
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            const std::array<int, 2> image{(m00 * vectors[i][0] + m01 * vectors[i][1]) % 3,
                                           (m10 * vectors[i][0] + m11 * vectors[i][1]) % 3};
            for (std::size_t j = 0; j < vectors.size(); ++j)
                if (vectors[j] == image) p[i] = static_cast<std::int64_t>(j);
        }
        return p;
    };
    return AbstractGroup::generate(vectors.size(), {as_permutation(1, 1, 0, 1), as_permutation(1, 0, 1, 1)}, 10000,
                                   "binary_tetrahedral");
}

} // namespace kummer
