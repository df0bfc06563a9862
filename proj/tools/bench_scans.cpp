// Timing comparison of the serial reference kernels against the OpenMP ones,
// with a bitwise equality check on the results.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "carousel/scalar_kernel.hpp"
#include "carousel/scan.hpp"

using namespace carousel;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start).count();
}

template <typename Fn>
double timed(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return ms_since(start);
}

void report(const char* kernel, int n, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-16s n=%-5d serial=%9.2f ms  parallel=%9.2f ms  speedup=%5.2fx  %s\n", kernel, n,
                serial_ms, parallel_ms, serial_ms / parallel_ms,
                identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int n_period = 400;
    int n_audit = 400;
    int n_closure = 16;
    for (int i = 1; i < argc - 1; ++i) {
        if (std::strcmp(argv[i], "--n") == 0) {
            n_period = n_audit = std::atoi(argv[i + 1]);
        } else if (std::strcmp(argv[i], "--closure-n") == 0) {
            n_closure = std::atoi(argv[i + 1]);
        } else if (std::strcmp(argv[i], "--threads") == 0) {
            scan::set_threads(std::atoi(argv[i + 1]));
        }
    }

    std::printf("threads available: %d\n", scan::max_threads());
    const double lo = kOrbitEnergyMin + 1e-6;
    const double hi = kOrbitEnergyMax - 1e-6;

    {
        const auto grid = scan::energy_grid(lo, hi, n_period);
        std::vector<scan::PeriodScanRow> serial_rows, parallel_rows;
        const double ts = timed([&] { serial_rows = scan::period_scan_serial(grid, 1001); });
        const double tp = timed([&] { parallel_rows = scan::period_scan_parallel(grid, 1001); });
        const bool same = std::memcmp(serial_rows.data(), parallel_rows.data(),
                                      serial_rows.size() * sizeof(serial_rows[0])) == 0;
        report("period-scan", n_period, ts, tp, same);
    }
    {
        const auto grid = scan::energy_grid(lo, hi, n_audit);
        std::vector<BoundAudit> serial_rows, parallel_rows;
        const double ts = timed([&] { serial_rows = scan::bound_audit_scan_serial(grid, 4001); });
        const double tp = timed([&] { parallel_rows = scan::bound_audit_scan_parallel(grid, 4001); });
        bool same = serial_rows.size() == parallel_rows.size();
        for (std::size_t i = 0; same && i < serial_rows.size(); ++i) {
            const BoundAudit& a = serial_rows[i];
            const BoundAudit& b = parallel_rows[i];
            same = a.h == b.h && a.grid == b.grid && a.lower_margin == b.lower_margin &&
                   a.upper_margin == b.upper_margin && a.curvature_margin == b.curvature_margin &&
                   a.pass == b.pass;
        }
        report("bound-audit", n_audit, ts, tp, same);
    }
    {
        const auto grid = scan::energy_grid(2.42, 2.59, n_closure);
        std::vector<ClosureRow> serial_rows, parallel_rows;
        const double ts = timed([&] { serial_rows = scan::closure_scan_serial(grid, 1e-3); });
        const double tp = timed([&] { parallel_rows = scan::closure_scan_parallel(grid, 1e-3); });
        const bool same = std::memcmp(serial_rows.data(), parallel_rows.data(),
                                      serial_rows.size() * sizeof(serial_rows[0])) == 0;
        report("closure-scan", n_closure, ts, tp, same);
    }
    return 0;
}
