#include <benchmark/benchmark.h>

#include <numeric>

#include "klrtab/cartan.hpp"
#include "klrtab/crystal.hpp"
#include "klrtab/kl.hpp"
#include "klrtab/qchar.hpp"
#include "klrtab/rmatrix.hpp"
#include "klrtab/transition.hpp"

using namespace klrtab;

namespace {

void bm_kl_full_table(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    std::vector<Permutation> perms;
    {
        std::vector<int> w(m);
        std::iota(w.begin(), w.end(), 1);
        do perms.emplace_back(w);
        while (std::next_permutation(w.begin(), w.end()));
    }
    for (auto _ : state) {
        // fresh context each round, so the memo is rebuilt
        KLContext ctx(m);
        for (const auto& x : perms)
            for (const auto& y : perms) benchmark::DoNotOptimize(ctx.poly(x, y));
    }
}
BENCHMARK(bm_kl_full_table)->Arg(4)->Arg(5);

void bm_transition_closing_example(benchmark::State& state) {
    ColumnStrictConcat S(5, {ColumnTableau(5, {1, 2, 3}), ColumnTableau(5, {1, 3}),
                             ColumnTableau(5, {2, 4}), ColumnTableau(5, {5})});
    SSYTab T(5, {{1, 1, 3, 5}, {2, 2, 4}, {3}});
    for (auto _ : state) benchmark::DoNotOptimize(transition_entry(S, T));
}
BENCHMARK(bm_transition_closing_example);

void bm_shuffle(benchmark::State& state) {
    CartanA cd(5);
    QChar a = qch_sp(ColumnTableau(5, {3, 5}), cd);
    QChar b = qch_sp(ColumnTableau(5, {1, 3, 4, 5}), cd);
    for (auto _ : state) benchmark::DoNotOptimize(shuffle(a, b, cd));
}
BENCHMARK(bm_shuffle);

void bm_sigma_sweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<ColumnTableau> cols;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> entries;
        for (int a = 1; a <= n; ++a)
            if (mask & (1 << (a - 1))) entries.push_back(a);
        if (static_cast<int>(entries.size()) <= n - 1) cols.emplace_back(n, entries);
    }
    for (auto _ : state)
        for (const auto& a : cols)
            for (const auto& b : cols) benchmark::DoNotOptimize(sigma(a, b, n));
}
BENCHMARK(bm_sigma_sweep)->Arg(4)->Arg(5);

void bm_to_highest_weight(benchmark::State& state) {
    CartanA cd(5);
    TensorElt b(5, {ColumnTableau(5, {3, 5}), ColumnTableau(5, {2, 4}),
                    ColumnTableau(5, {1, 4, 5})});
    for (auto _ : state) benchmark::DoNotOptimize(to_highest_weight(b, cd));
}
BENCHMARK(bm_to_highest_weight);

}  // namespace

BENCHMARK_MAIN();
