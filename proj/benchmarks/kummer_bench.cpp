#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "kummer/exactalg/smith.hpp"
#include "kummer/groupcore/catalog.hpp"
#include "kummer/repring/molien.hpp"
#include "kummer/strata/strata.hpp"

namespace {

const std::vector<std::string> catalog_cases{"z6_sl2", "octahedral_s4_sl3", "d8_b2", "standard_s4_d2"};

void BM_Stratify(benchmark::State& state) {
    const auto action = kummer::catalog_action(catalog_cases.at(state.range(0)));
    state.SetLabel(action.label());
    for (auto _ : state) benchmark::DoNotOptimize(kummer::stratify(action));
}
BENCHMARK(BM_Stratify)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_QuotientPoincare(benchmark::State& state) {
    const auto action = kummer::catalog_action(catalog_cases.at(state.range(0)));
    state.SetLabel(action.label());
    for (auto _ : state) benchmark::DoNotOptimize(kummer::quotient_poincare(action));
}
BENCHMARK(BM_QuotientPoincare)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_SmithNormalForm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(1);
    // Small entries, as for lattice actions; wide random entries overflow int64 in the transforms.
    std::uniform_int_distribution<int> entry(-2, 2);
    kummer::IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    for (auto _ : state) benchmark::DoNotOptimize(kummer::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
