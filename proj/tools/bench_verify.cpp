// Benchmark of the trial engine: OpenMP sharding versus the serial
// reference, on the heavier randomized suites. Also asserts that the two
// engines produce identical reports, since that equivalence is the whole
// point of keeping the serial path around.

#include <chrono>
#include <iostream>

#include "colie/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double run_ms(const colie::Suite& s, const colie::RunConfig& cfg, bool parallel,
              colie::SuiteReport& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = parallel ? colie::run_suite(s, cfg) : colie::run_suite_serial(s, cfg);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main() {
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (compiled without OpenMP)\n";
#endif
    struct Case {
        const char* suite;
        std::size_t trials;
        std::size_t max_len;
    };
    const Case cases[] = {
        {"jacobi", 60, 6},
        {"derivation", 80, 6},
        {"vf-hom", 40, 5},
    };
    bool all_equal = true;
    for (const Case& c : cases) {
        const colie::Suite* s = colie::find_suite(c.suite);
        if (!s) {
            std::cerr << "missing suite " << c.suite << "\n";
            return 2;
        }
        colie::RunConfig cfg;
        cfg.trials = c.trials;
        cfg.max_len = c.max_len;
        colie::SuiteReport serial, parallel;
        double ts = run_ms(*s, cfg, false, serial);
        double tp = run_ms(*s, cfg, true, parallel);
        bool equal = serial.to_json() == parallel.to_json();
        all_equal = all_equal && equal;
        std::cout << c.suite << ": serial " << ts << " ms, parallel " << tp << " ms, speedup "
                  << (tp > 0 ? ts / tp : 0.0) << "x, reports "
                  << (equal ? "identical" : "DIFFER") << "\n";
    }
    if (!all_equal) {
        std::cerr << "engines disagree\n";
        return 1;
    }
    return 0;
}
