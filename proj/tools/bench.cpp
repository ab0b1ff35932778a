// Benchmark comparing the serial reference kernels against the OpenMP ones:
// canonical decorated-path enumeration and mountain-range assembly.  Both
// paths must produce identical results; the run aborts on any mismatch.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cabling/atlas.hpp"
#include "cabling/paths.hpp"

using namespace cabling;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

// A slope whose minimal path alternates continued-fraction digits, so every
// block has length one and the enumeration fans out maximally.
Slope fibonacci_slope(int depth) {
    Int a = 1, b = 1;
    for (int i = 0; i < depth; ++i) {
        Int c = a + b;
        a = b;
        b = c;
    }
    return Slope(-a, b);
}

LegendrianAtlas bench_atlas(int generators) {
    LegendrianAtlas atlas;
    atlas.name = "bench";
    atlas.max_tb = -1;
    for (int i = 0; i < generators; ++i)
        atlas.generators.push_back({"g" + std::to_string(i), -1, Int(2 * i)});
    for (int i = 0; i + 1 < generators; ++i)
        atlas.merges.push_back({"g" + std::to_string(i), 2, 1, "g" + std::to_string(i + 1), 1, 2});
    atlas.validate();
    return atlas;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not enabled; both runs are serial\n");
#endif

    {
        Slope target = fibonacci_slope(20);
        FareyPath path = shortest_path(target);
        Int count = count_solid_torus(target);
        std::printf("enumerate: slope %s, path length %zu, %s structures\n", target.str().c_str(),
                    path.edge_count(), count.str().c_str());

        auto t0 = std::chrono::steady_clock::now();
        auto serial = enumerate_canonical_serial(path, false);
        auto t1 = std::chrono::steady_clock::now();
        auto parallel = enumerate_canonical_parallel(path, false);
        auto t2 = std::chrono::steady_clock::now();
        if (serial != parallel) {
            std::fprintf(stderr, "kernel mismatch in enumeration\n");
            return 1;
        }
        double ts = seconds(t0, t1), tp = seconds(t1, t2);
        std::printf("  serial   %.3fs\n  parallel %.3fs  (x%.2f)\n", ts, tp, tp > 0 ? ts / tp : 0.0);
    }

    {
        LegendrianAtlas atlas = bench_atlas(48);
        Int floor = atlas.max_tb - 400;
        std::printf("mountain range: %zu generators, floor %s\n", atlas.generators.size(), floor.str().c_str());
#ifdef _OPENMP
        int threads = omp_get_max_threads();
        omp_set_num_threads(1);
#endif
        auto t0 = std::chrono::steady_clock::now();
        MountainRange serial = mountain_range(atlas, floor);
        auto t1 = std::chrono::steady_clock::now();
#ifdef _OPENMP
        omp_set_num_threads(threads);
#endif
        MountainRange parallel = mountain_range(atlas, floor);
        auto t2 = std::chrono::steady_clock::now();
        if (serial.points.size() != parallel.points.size()) {
            std::fprintf(stderr, "kernel mismatch in mountain range\n");
            return 1;
        }
        for (std::size_t i = 0; i < serial.points.size(); ++i) {
            if (serial.points[i].groups != parallel.points[i].groups) {
                std::fprintf(stderr, "kernel mismatch in mountain range at point %zu\n", i);
                return 1;
            }
        }
        double ts = seconds(t0, t1), tp = seconds(t1, t2);
        std::printf("  1 thread  %.3fs\n  N threads %.3fs  (x%.2f)\n", ts, tp, tp > 0 ? ts / tp : 0.0);
    }
    return 0;
}
