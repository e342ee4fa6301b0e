#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kummer/groupcore/integral_action.hpp"

namespace kummer {

struct CatalogEntry {
    enum class Kind { Integral, Analytic };
    std::string name;
    std::string description;
    Kind kind = Kind::Integral;
    unsigned default_d = 1;
    friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// Named entries in a stable order; `filter` keeps names containing it.
std::vector<CatalogEntry> list_catalog(std::string_view filter = {});

/// Integral entry by name, including the parametric forms standard_sN,
/// natural_sN, quotient_sN and wreath_R_2. `d` overrides the entry's default.
/// Throws UnknownCatalogEntry.
IntegralAction catalog_action(std::string_view name, std::optional<unsigned> d = std::nullopt,
                              std::size_t cap = 10000);

/// Permutation model of an analytic-only entry. Throws UnknownCatalogEntry.
AbstractGroup catalog_abstract(std::string_view name);

bool is_analytic_entry(std::string_view name);

/// Action of S_n on the sum-zero sublattice of Z^n, basis e_i - e_0.
IntegralAction standard_sn(unsigned n, unsigned d = 2, std::size_t cap = 10000);
/// Permutation action of S_n on Z^n.
IntegralAction natural_sn(unsigned n, unsigned d = 2, std::size_t cap = 10000);
/// Action of S_n on Z^n / Z(1, ..., 1), basis the images of e_1, ..., e_{n-1}.
IntegralAction quotient_sn(unsigned n, unsigned d = 2, std::size_t cap = 10000);
/// Signed permutation matrices (Z_2)^r semidirect S_r.
IntegralAction wreath(unsigned r, unsigned m, unsigned d = 2, std::size_t cap = 10000);
/// SL(2, 3) acting on the eight non-zero vectors of F_3^2.
AbstractGroup binary_tetrahedral();

} // namespace kummer
