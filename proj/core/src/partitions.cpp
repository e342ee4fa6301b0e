#include "kummer/mckay/partitions.hpp"

#include <algorithm>
#include <numeric>

#include "kummer/error.hpp"
#include "kummer/exactalg/checked.hpp"

namespace kummer {

namespace {

void extend(unsigned remaining, unsigned max_part, Partition& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        extend(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(unsigned n) {
    std::vector<Partition> out;
    Partition prefix;
    extend(n, n, prefix, out);
    return out;
}

std::vector<std::int64_t> kappa(unsigned n) {
    if (n == 0) throw Error(ErrorCode::InvalidInput, "partitions of 0 carry no fiber");
    std::vector<std::int64_t> k(n, 0);
    for (const auto& p : partitions(n)) ++k[n - p.size()];
    return k;
}

IntPolynomial partition_fiber(unsigned n) {
    const auto k = kappa(n);
    std::vector<std::int64_t> c(2 * n - 1, 0);
    for (std::size_t i = 0; i < k.size(); ++i) c[2 * i] = k[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial young_fiber(std::span<const unsigned> partition) {
    IntPolynomial p = IntPolynomial::constant(1);
    for (auto a : partition) p *= partition_fiber(a);
    return p;
}

PartitionData partition_data(std::span<const unsigned> partition) {
    PartitionData d;
    Partition sorted(partition.begin(), partition.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (auto a : sorted) {
        if (a == 0) throw Error(ErrorCode::InvalidInput, "partition parts must be positive");
        if (!d.blocks.empty() && d.blocks.back().first == a) {
            ++d.blocks.back().second;
        } else {
            d.blocks.emplace_back(a, 1);
        }
        d.gcd = std::gcd(d.gcd, a);
    }
    d.length = static_cast<unsigned>(sorted.size());
    for (const auto& [a, b] : d.blocks)
        for (unsigned i = 2; i <= b; ++i) d.weyl_order = checked_mul(d.weyl_order, i);
    return d;
}

Partition cycle_type(std::span<const unsigned> permutation) {
    std::vector<bool> seen(permutation.size(), false);
    Partition out;
    for (std::size_t i = 0; i < permutation.size(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        for (std::size_t j = i; !seen[j]; j = permutation[j]) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<unsigned> permutation_with_cycle_type(std::span<const unsigned> partition) {
    std::vector<unsigned> p;
    unsigned start = 0;
    for (auto a : partition) {
        for (unsigned i = 0; i < a; ++i) p.push_back(start + (i + 1) % a);
        start += a;
    }
    return p;
}

} // namespace kummer
