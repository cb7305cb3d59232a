#include <benchmark/benchmark.h>

#include "superschur/characters.hpp"
#include "superschur/commutant.hpp"
#include "superschur/ideals.hpp"
#include "superschur/schur_weyl.hpp"

using namespace superschur;

static void BM_YoungSymmetrizer(benchmark::State& state) {
    const auto& parts = partitions_of(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const Partition& lambda : parts)
            benchmark::DoNotOptimize(young_symmetrizer(lambda));
}
BENCHMARK(BM_YoungSymmetrizer)->DenseRange(3, 6);

static void BM_EvaluateSymmetrizer(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    Partition lambda = partitions_of(d)[1]; // the (d-1,1) hook
    GroupAlgebraElement c = young_symmetrizer(lambda);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(c, SuperSpace{1, 1}));
}
BENCHMARK(BM_EvaluateSymmetrizer)->DenseRange(3, 6);

static void BM_CommutantDim(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(commutant_dim(SuperSpace{1, 1}, d));
}
BENCHMARK(BM_CommutantDim)->DenseRange(2, 5);

static void BM_CharacterTable(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        for (const Partition& lambda : partitions_of(d))
            for (const Partition& mu : partitions_of(d))
                benchmark::DoNotOptimize(mn_character(lambda, mu));
    }
}
BENCHMARK(BM_CharacterTable)->DenseRange(4, 7);

static void BM_LrCoeff(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long total = 0;
        for (const Partition& lambda : partitions_of(d))
            for (int k = 0; k <= d; ++k)
                for (const Partition& mu : partitions_of(k))
                    for (const Partition& nu : partitions_of(d - k))
                        total += lr_coeff(lambda, mu, nu);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_LrCoeff)->DenseRange(4, 6);

static void BM_JmnClosure(benchmark::State& state) {
    IdealSequence seq = jmn_sequence(1, 1, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        ClosureReport report = check_closure(seq);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_JmnClosure)->DenseRange(3, 5);

BENCHMARK_MAIN();
