#include <benchmark/benchmark.h>

#include "anharm/basis.hpp"
#include "anharm/eigensolver.hpp"
#include "anharm/hamiltonian.hpp"
#include "anharm/model.hpp"
#include "anharm/scan.hpp"

namespace {

const anharm::DoubleWellParams kShallow{-2.0, 1.0, 0.0};

void BM_OptimizeR(benchmark::State& state) {
    const anharm::Model model = anharm::from_double_well(kShallow);
    const int t = static_cast<int>(state.range(0)) / 2;
    for (auto _ : state)
        benchmark::DoNotOptimize(anharm::optimize_r(model, t));
}
BENCHMARK(BM_OptimizeR)->Arg(40)->Arg(200);

void BM_Assemble(benchmark::State& state) {
    const anharm::Model model = anharm::from_double_well(kShallow);
    const int n = static_cast<int>(state.range(0));
    const anharm::BasisSpec basis = anharm::make_basis(model, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(anharm::assemble(model, basis));
}
BENCHMARK(BM_Assemble)->Arg(50)->Arg(100)->Arg(200);

void BM_Eigh(benchmark::State& state) {
    const anharm::Model model = anharm::from_double_well(kShallow);
    const int n = static_cast<int>(state.range(0));
    const anharm::BasisSpec basis = anharm::make_basis(model, n);
    const anharm::SymmetricBandMatrix h = anharm::assemble(model, basis);
    for (auto _ : state)
        benchmark::DoNotOptimize(anharm::eigh(h, basis));
}
BENCHMARK(BM_Eigh)->Arg(50)->Arg(100)->Arg(200);

void BM_FieldScan(benchmark::State& state) {
    const auto grid = anharm::make_grid(0.0, 1.0, 0.02);
    for (auto _ : state)
        benchmark::DoNotOptimize(anharm::scan_field(kShallow, grid, 40, 2));
}
BENCHMARK(BM_FieldScan);

}  // namespace

BENCHMARK_MAIN();
