// Serial vs OpenMP timings for the data-parallel kernels.
#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "amix/distribution.hpp"
#include "amix/graph.hpp"
#include "amix/kernels.hpp"
#include "amix/spectral.hpp"

namespace {

double seconds(const std::function<void()>& fn, int reps)
{
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / reps;
}

void report(const char* name, double serial, double parallel, double diff)
{
    std::printf("%-32s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  max|diff| %.2e\n", name, serial, parallel,
                serial / parallel, diff);
}

}  // namespace

int main()
{
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
    const auto dist = amix::Distribution::gaussian(1.0, 0.5);

    for (int n : {8, 16, 32}) {
        const auto sd = amix::decompose(amix::random_graph(n, 0.5, 7));
        const auto times = amix::sample_times(dist, 50000, 11);
        Eigen::MatrixXd a, b;
        const double ts = seconds([&] { a = amix::kernels::mixing_mean_serial(sd, times); }, 2);
        const double tp = seconds([&] { b = amix::kernels::mixing_mean_parallel(sd, times); }, 2);
        char label[64];
        std::snprintf(label, sizeof label, "mixing mean n=%d (5e4 samples)", n);
        report(label, ts, tp, (a - b).cwiseAbs().maxCoeff());

        std::vector<double> x, y;
        const double us = seconds([&] { x = amix::kernels::trace_mixing_serial(sd, times); }, 2);
        const double up = seconds([&] { y = amix::kernels::trace_mixing_parallel(sd, times); }, 2);
        double diff = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) diff = std::max(diff, std::abs(x[i] - y[i]));
        std::snprintf(label, sizeof label, "trace mixing n=%d", n);
        report(label, us, up, diff);
    }

    for (int n : {8, 16, 24}) {
        const auto sd = amix::decompose(amix::random_graph(n, 0.5, 3));
        Eigen::MatrixXcd a, b;
        const double ts = seconds([&] { a = amix::kernels::choi_matrix_serial(sd, dist); }, 1);
        const double tp = seconds([&] { b = amix::kernels::choi_matrix_parallel(sd, dist); }, 1);
        char label[64];
        std::snprintf(label, sizeof label, "Choi assembly n=%d", n);
        report(label, ts, tp, (a - b).cwiseAbs().maxCoeff());
    }
    return 0;
}
