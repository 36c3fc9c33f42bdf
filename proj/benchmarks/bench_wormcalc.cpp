#include <benchmark/benchmark.h>

#include "wormcalc/compare.hpp"
#include "wormcalc/hyper.hpp"
#include "wormcalc/oracle.hpp"
#include "wormcalc/ordertype.hpp"
#include "wormcalc/sequences.hpp"
#include "wormcalc/textio.hpp"

using namespace wormcalc;

namespace {

const Worm& five_entry() {
    static const Worm a = parse_worm("[w*2+1, w, w*2+1, 0, w^2]");
    return a;
}

void BM_order_type(benchmark::State& state) {
    const Worm a = parse_worm("21032101210", true);
    for (auto _ : state) benchmark::DoNotOptimize(o(a));
}
BENCHMARK(BM_order_type);

void BM_order_type_transfinite(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(o(five_entry()));
}
BENCHMARK(BM_order_type_transfinite);

void BM_cmp0_syntactic(benchmark::State& state) {
    const Worm a = parse_worm("1201021", true);
    const Worm b = parse_worm("1201102", true);
    for (auto _ : state) benchmark::DoNotOptimize(cmp0_syntactic(a, b));
}
BENCHMARK(BM_cmp0_syntactic);

void BM_consistency_sequence(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(consistency_sequence(five_entry()));
}
BENCHMARK(BM_consistency_sequence);

void BM_hyperexp(benchmark::State& state) {
    const Ordinal xi = parse_ordinal("w^w*3 + w^2 + w + 2");
    const Ordinal x = parse_ordinal("phi(1,w) + 5");
    for (auto _ : state) benchmark::DoNotOptimize(hyperexp(xi, x));
}
BENCHMARK(BM_hyperexp);

void BM_hyperlog(benchmark::State& state) {
    const Ordinal xi = parse_ordinal("w+1");
    const Ordinal x = parse_ordinal("phi(2,0) + phi(1,phi(1,w)*2)");
    for (auto _ : state) benchmark::DoNotOptimize(hyperlog(xi, x));
}
BENCHMARK(BM_hyperlog);

void BM_cross_check(benchmark::State& state) {
    const auto len = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(exhaustive_cross_check(len, {Ordinal{}, Ordinal::finite(1)}));
}
BENCHMARK(BM_cross_check)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
