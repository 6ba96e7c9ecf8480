// Serial reference vs OpenMP kernels on moment-body sized inputs.
#include "lpc/fields.hpp"
#include "lpc/geometry.hpp"
#include "lpc/instances.hpp"
#include "lpc/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace lpc;

namespace {

kernels::PointSet field_points(int nodes) {
    Rng rng(1);
    const GridField g = random_bumps(rng, 2).sample(nodes).as_grid();
    kernels::PointSet pts;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.values[i] != 0) {
            const Vec x = g.point(i);
            pts.push(x(0), x(1), g.values[i] * g.cell_volume());
        }
    return pts;
}

template <auto Kernel>
void BM_abs_moments(benchmark::State& state) {
    const auto pts = field_points(static_cast<int>(state.range(0)));
    const GridPtr grid = SphereGrid::circle(1024);
    const auto& dirs = grid->points();
    std::vector<double> out(dirs.size());
    for (auto _ : state) {
        Kernel(pts, dirs, 1.5, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(pts.size() * dirs.size()));
}

template <auto Kernel>
void BM_superlevel(benchmark::State& state) {
    Rng rng(2);
    const Field f = random_bumps(rng, 2).sample(static_cast<int>(state.range(0)));
    const auto s = grid_simplices(f.as_grid());
    std::vector<double> ts(64), out(64);
    for (int k = 0; k < 64; ++k) ts[k] = f.max_abs() * (k + 0.5) / 64;
    for (auto _ : state) {
        Kernel(s, ts, out);
        benchmark::DoNotOptimize(out.data());
    }
}

}  // namespace

BENCHMARK(BM_abs_moments<kernels::abs_moments_serial>)->Name("abs_moments/serial")->Arg(129)->Arg(257);
BENCHMARK(BM_abs_moments<kernels::abs_moments_parallel>)->Name("abs_moments/omp")->Arg(129)->Arg(257);
BENCHMARK(BM_superlevel<kernels::superlevel_measure_serial>)->Name("superlevel/serial")->Arg(257);
BENCHMARK(BM_superlevel<kernels::superlevel_measure_parallel>)->Name("superlevel/omp")->Arg(257);

BENCHMARK_MAIN();
