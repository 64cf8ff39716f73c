// Compares the parallel batch kernels against their serial references.
// Both paths produce bit-identical output; this only measures wall time.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <vector>

#include "ckc/oracle.hpp"
#include "ckc/sampler.hpp"

namespace {

template <typename F>
double time_once(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

template <typename F>
double time_best(F&& f, int reps) {
    double best = time_once(f);
    for (int i = 1; i < reps; ++i) best = std::min(best, time_once(f));
    return best;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %10.4fs %10.4fs %7.2fx\n", name, serial, parallel,
                serial / parallel);
}

}  // namespace

int main() {
    std::printf("%-28s %11s %11s %8s\n", "kernel", "serial", "parallel", "speedup");

    {
        ckc::ChainSpec chain(std::vector<double>(12, 1.0));
        const std::size_t count = 20000;
        double ts = time_best(
            [&] { ckc::serial::sample_cs(chain, 1, count); }, 3);
        double tp = time_best([&] { ckc::sample_cs(chain, 1, count); }, 3);
        row("parameter draws (n=12)", ts, tp);
    }

    {
        ckc::ChainSpec chain(std::vector<double>(10, 1.0));
        ckc::SampleOptions options;
        options.count = 20000;
        options.close = true;
        double ts = time_best(
            [&] { ckc::serial::sample_configs(chain, options); }, 3);
        double tp = time_best([&] { ckc::sample_configs(chain, options); }, 3);
        row("closed configs (n=10)", ts, tp);
    }

    {
        ckc::ChainSpec chain{1.0, 1.0, 1.0, 1.0, 1.0};
        const std::size_t res = 40;
        double tol = ckc::grid_tolerance(chain, res);
        double ts = time_best(
            [&] { ckc::serial::grid_circular_configs(chain, res, tol); }, 3);
        double tp =
            time_best([&] { ckc::grid_circular_configs(chain, res, tol); }, 3);
        row("grid search (n=5, res=40)", ts, tp);
    }

    {
        ckc::ChainSpec chain{1.0, 2.0, 1.5, 1.0, 1.0};
        const std::size_t res = 600;
        double ts =
            time_best([&] { ckc::serial::min_x_grid(chain, 4, res); }, 3);
        double tp = time_best([&] { ckc::min_x_grid(chain, 4, res); }, 3);
        row("cross-term min (m=4)", ts, tp);
    }

    return 0;
}
