// Serial vs OpenMP timings of the sweep and envelope kernels.
// usage: bench_kernels [grid side] [repetitions]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "gvf/kernels.hpp"

using namespace gvf;
using kernels::Backend;

static double time_ms(int reps, const std::function<void()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) body();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

int main(int argc, char** argv)
{
    const int side = argc > 1 ? std::atoi(argv[1]) : 512;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 20;
    const auto g = build_grid(side, side);
    const int n = g.vertex_count();

    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> val(0.0, 1.0);
    std::vector<double> in(n), out(n);
    for (auto& v : in) v = val(rng);
    std::vector<std::uint8_t> fixed(n, 0);
    std::vector<LevelGuidingSet::entry_type> entries;
    for (int k = 0; k < 16; ++k) {
        const VertexId v = static_cast<VertexId>(rng() % n);
        fixed[v] = 1;
        if (std::none_of(entries.begin(), entries.end(), [&](auto& e) { return e.vertex == v; }))
            entries.push_back({v, 1 + static_cast<int>(rng() % 8)});
    }
    const LevelGuidingSet guides(entries);
    const int levels = 8 + 2 * side;

    std::printf("grid %dx%d, %d threads, %d reps\n", side, side, omp_get_max_threads(), reps);
    std::printf("%-10s %12s %12s %8s\n", "kernel", "serial ms", "openmp ms", "speedup");
    auto row = [&](const char* name, const std::function<void(Backend)>& k) {
        const double s = time_ms(reps, [&] { k(Backend::serial); });
        const double p = time_ms(reps, [&] { k(Backend::openmp); });
        std::printf("%-10s %12.3f %12.3f %8.2f\n", name, s, p, s / p);
    };
    row("relax", [&](Backend b) { kernels::relax_sweep(b, g, fixed, 0.2, in, out); });
    row("umbrella", [&](Backend b) { kernels::umbrella_sweep(b, g, fixed, in, out); });
    row("envelopes", [&](Backend b) { kernels::envelopes(b, g, guides, levels); });
}
