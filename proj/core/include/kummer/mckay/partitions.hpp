#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "kummer/exactalg/polynomial.hpp"

namespace kummer {

using Partition = std::vector<unsigned>;

/// Partitions of n, parts non-increasing, in reverse lexicographic order
/// (starting with (n)).
std::vector<Partition> partitions(unsigned n);

/// kappa[i] = number of partitions of n of length n - i, for i = 0..n-1.
std::vector<std::int64_t> kappa(unsigned n);

/// sum_i kappa_i t^{2i}.
IntPolynomial partition_fiber(unsigned n);

/// prod over parts a of partition_fiber(a).
IntPolynomial young_fiber(std::span<const unsigned> partition);

/// (a_i^{b_i}) description of a partition.
struct PartitionData {
    std::vector<std::pair<unsigned, unsigned>> blocks;  // (part a_i, multiplicity b_i), a_i decreasing
    unsigned length = 0;
    std::int64_t weyl_order = 1;                        // prod b_i!
    unsigned gcd = 0;
};

PartitionData partition_data(std::span<const unsigned> partition);

/// Cycle type of a permutation given by its image list, as a partition.
Partition cycle_type(std::span<const unsigned> permutation);

/// A permutation of {0..n-1} with the given cycle type (consecutive cycles).
std::vector<unsigned> permutation_with_cycle_type(std::span<const unsigned> partition);

} // namespace kummer
