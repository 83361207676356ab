// bench_search.cpp
//
// Timing comparison of the search paths:
//   serial reference vs OpenMP chunk-parallel run_search,
//   incremental vs recomputed rho_b along the Gray walk,
//   packed popcount correlation vs the elementwise oracle kernel.
//
//   ./bench_search --n 23 --workers 4 --reps 3

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <thread>

#include "obzcp/search.hpp"
#include "oracle.hpp"

namespace {

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"search benchmark"};
    int n = 23;
    int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    int reps = 3;
    app.add_option("--n", n, "odd sequence length");
    app.add_option("--workers", workers, "threads for the parallel path");
    app.add_option("--reps", reps, "repetitions (best time reported)");
    CLI11_PARSE(app, argc, argv);

    obzcp::SearchConfig cfg;
    cfg.n = n;
    cfg.max_acc = 2;
    cfg.validate();

    std::size_t classes_serial = 0;
    std::size_t classes_parallel = 0;
    const double serial = best_of(reps, [&] { classes_serial = obzcp::run_search_serial(cfg).pairs.size(); });
    auto par_cfg = cfg;
    par_cfg.workers = workers;
    const double parallel = best_of(reps, [&] { classes_parallel = obzcp::run_search(par_cfg).pairs.size(); });
    auto rec_cfg = cfg;
    rec_cfg.rho_update = obzcp::RhoUpdate::Recompute;
    const double recompute = best_of(reps, [&] { obzcp::run_search_serial(rec_cfg); });

    const double work = std::ldexp(1.0, 2 * cfg.half_width()) * 8;
    std::printf("search n=%d (%.3g b-candidates, %zu classes)\n", n, work, classes_serial);
    std::printf("  %-28s %9.3f s  %8.2f M cand/s\n", "serial, incremental rho", serial, work / serial / 1e6);
    std::printf("  %-28s %9.3f s  %8.2f M cand/s\n", "serial, recomputed rho", recompute, work / recompute / 1e6);
    char label[64];
    std::snprintf(label, sizeof label, "openmp x%d, incremental rho", workers);
    std::printf("  %-28s %9.3f s  %8.2f M cand/s  speedup %.2f\n", label, parallel, work / parallel / 1e6,
                serial / parallel);
    if (classes_parallel != classes_serial) {
        std::printf("  class count differs: serial %zu, parallel %zu\n", classes_serial, classes_parallel);
        return 1;
    }

    // Correlation kernels over a batch of random sequences.
    std::mt19937_64 rng(7);
    std::vector<obzcp::BinarySequence> seqs;
    for (int i = 0; i < 20000; ++i) seqs.emplace_back(n, rng() & obzcp::low_mask(n));
    long long sink = 0;
    const double packed = best_of(reps, [&] {
        for (const auto& s : seqs) {
            for (int tau = 1; tau < n; ++tau) sink += obzcp::aacf(s, tau);
        }
    });
    const double naive = best_of(reps, [&] {
        for (const auto& s : seqs) {
            const auto r = obzcp::oracle::naive_rho(s);
            for (int tau = 1; tau < n; ++tau) sink += r[static_cast<std::size_t>(tau)];
        }
    });
    std::printf("aacf, %zu sequences x %d lags\n", seqs.size(), n - 1);
    std::printf("  %-28s %9.4f s\n", "packed popcount", packed);
    std::printf("  %-28s %9.4f s  (%.1fx slower)\n", "elementwise oracle", naive, naive / packed);
    return sink == 42 ? 2 : 0;
}
