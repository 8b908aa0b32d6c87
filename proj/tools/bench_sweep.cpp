// Compares the serial reference sweep against the OpenMP kernel on the same
// grid and checks that the two reports agree entry by entry.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "cslie/sweep.hpp"

using namespace cslie;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

} // namespace

int main(int argc, char** argv) {
    SweepOptions opt;
    // a mid-sized slice by default; pass "full" for all ten cases
    if (argc > 1 && std::string(argv[1]) == "full") {
        // everything
    } else {
        opt.cases = {"h3R-i", "h3R-iii", "h3R-iv", "h3R-v", "R4-ii", "R4-iv"};
    }

    auto t0 = Clock::now();
    SweepReport serial = classify8_sweep_serial(opt);
    auto t1 = Clock::now();
    double t_serial = seconds(t0, t1);
    std::printf("serial:   %8.3f s  (%lld points, %.1f us/point)\n", t_serial, serial.points,
                1e6 * t_serial / (double)serial.points);

    for (int threads : {2, 4, omp_get_max_threads()}) {
        auto t2 = Clock::now();
        SweepReport par = classify8_sweep_parallel(opt, threads);
        auto t3 = Clock::now();
        double t_par = seconds(t2, t3);
        bool same = (par == serial);
        std::printf("omp x%-3d: %8.3f s  speedup %.2fx  identical=%s\n", threads, t_par,
                    t_serial / t_par, same ? "yes" : "NO");
        if (!same) return 1;
    }
    std::printf("failures: %lld\n", serial.failures);
    return serial.failures == 0 ? 0 : 1;
}
