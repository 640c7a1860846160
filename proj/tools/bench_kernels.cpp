// Timing comparison of the three evaluation routes for the Frobenius error:
//   parallel  - state-vector kernels, basis columns dispatched to the pool
//   serial    - the same kernels on a single thread
//   dense     - the dense-matrix reference implementation
// The routes must agree to rounding; the table shows what the fast path buys.

#include <chrono>
#include <cstdio>
#include <string>

#include "trotterkit/bench.hpp"
#include "trotterkit/catalog.hpp"
#include "trotterkit/gates.hpp"
#include "trotterkit/reference.hpp"
#include "trotterkit/threads.hpp"

namespace tk = trotterkit;

namespace {

template <typename F>
double timed_seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    tk::init_threads_from_env();
    const int max_sites = argc > 1 ? std::stoi(argv[1]) : 10;
    const double t = 2.0;
    const double h = 0.05;
    const auto& scheme = tk::get_scheme("blanes-moan-4");
    const tk::Arrangement arrangement{tk::Arrangement::S3};

    std::printf("scheme=%s arrangement=%s t=%g h=%g threads=%d\n", scheme.name.c_str(),
                arrangement.str().c_str(), t, h, tk::worker_thread_count());
    std::printf("%4s %12s %12s %12s %9s %14s\n", "L", "parallel[s]", "serial[s]", "dense[s]",
                "speedup", "route spread");

    for (int sites = 4; sites <= max_sites; ++sites) {
        const auto cfg = tk::SpinChainConfig::xxz(sites, 1);
        double err_par = 0.0, err_ser = 0.0, err_dense = 0.0;
        const double sec_par = timed_seconds([&] {
            err_par = tk::trotter_error(cfg, scheme, arrangement, h, t, false,
                                        tk::Execution::parallel);
        });
        const double sec_ser = timed_seconds([&] {
            err_ser = tk::trotter_error(cfg, scheme, arrangement, h, t, false,
                                        tk::Execution::serial);
        });
        // the dense route becomes prohibitive quickly; stop timing it at L=8
        double sec_dense = -1.0;
        double spread = std::abs(err_par - err_ser);
        if (sites <= 8) {
            sec_dense = timed_seconds([&] {
                err_dense = tk::reference::trotter_error_dense(cfg, scheme, arrangement, h, t);
            });
            spread = std::max(spread, std::abs(err_par - err_dense));
        }
        if (sec_dense >= 0.0)
            std::printf("%4d %12.4f %12.4f %12.4f %8.2fx %14.3g\n", sites, sec_par, sec_ser,
                        sec_dense, sec_ser / sec_par, spread);
        else
            std::printf("%4d %12.4f %12.4f %12s %8.2fx %14.3g\n", sites, sec_par, sec_ser,
                        "-", sec_ser / sec_par, spread);
    }
    return 0;
}
