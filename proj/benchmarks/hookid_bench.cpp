#include <benchmark/benchmark.h>

#include "hookid/abacus.hpp"
#include "hookid/identities.hpp"
#include "hookid/quotient.hpp"

using namespace hookid;

namespace {

void BM_EnumeratePartitions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long count = 0;
        for (const Partition& p : enumerate_partitions(n)) {
            count += p.length();
        }
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumeratePartitions)->Arg(20)->Arg(30)->Arg(40);

void BM_HookLengthsAllPartitions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        int total = 0;
        for (const Partition& p : enumerate_partitions(n)) {
            total += hook_lengths(p).total();
        }
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_HookLengthsAllPartitions)->Arg(15)->Arg(25);

void BM_DecomposeCompose(benchmark::State& state) {
    const int t = static_cast<int>(state.range(0));
    const std::vector<Partition> all = partitions_of(20);
    for (auto _ : state) {
        for (const Partition& p : all) {
            benchmark::DoNotOptimize(compose(decompose(p, t)));
        }
    }
}
BENCHMARK(BM_DecomposeCompose)->Arg(2)->Arg(5);

void BM_EulerPowerSymbolic(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(euler_product_power(Polynomial::variable(Var::s), degree));
    }
}
BENCHMARK(BM_EulerPowerSymbolic)->Arg(12)->Arg(25);

void BM_NekrasovOkounkov(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_nekrasov_okounkov(degree));
    }
}
BENCHMARK(BM_NekrasovOkounkov)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ExtensionTY(benchmark::State& state) {
    const int t = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_extension_ty(10, t));
    }
}
BENCHMARK(BM_ExtensionTY)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_MacdonaldCodingSum(benchmark::State& state) {
    const int t = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(macdonald_sides(8, t));
    }
}
BENCHMARK(BM_MacdonaldCodingSum)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Reversion(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(euler_reversion_by_lagrange(degree));
    }
}
BENCHMARK(BM_Reversion)->Arg(12)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
