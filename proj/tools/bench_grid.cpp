// Times the portrait grid with the serial reference evaluator against the
// OpenMP cell evaluator on a fixed workload and checks they agree.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ffdyn/parse.hpp"
#include "ffdyn/print.hpp"
#include "ffdyn/witness.hpp"

using namespace ffdyn;
namespace chrono = std::chrono;

namespace {

double run_ms(const RationalMap& phi, const ProjPointK& alpha, long mm, long nn,
              GridExecution exec, GridReport& out) {
    auto t0 = chrono::steady_clock::now();
    out = portrait_grid(phi, alpha, mm, nn, PlaceSet::none(), exec);
    auto t1 = chrono::steady_clock::now();
    return chrono::duration<double, std::milli>(t1 - t0).count();
}

bool same_reports(const GridReport& a, const GridReport& b) {
    if (a.cells.size() != b.cells.size()) return false;
    for (size_t i = 0; i < a.cells.size(); ++i) {
        const auto& ra = a.cells[i].report;
        const auto& rb = b.cells[i].report;
        if (ra.status != rb.status || ra.divisor != rb.divisor ||
            ra.rational_witnesses != rb.rational_witnesses ||
            ra.infinity_is_witness != rb.infinity_is_witness)
            return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    long max_m = 3, max_n = 4;
    std::string map_text = "z^2 + t", alpha_text = "1";
    if (argc > 1) map_text = argv[1];
    if (argc > 2) alpha_text = argv[2];
    if (argc > 3) max_m = std::stol(argv[3]);
    if (argc > 4) max_n = std::stol(argv[4]);

    RationalMap phi = parse_map(map_text);
    ProjPointK alpha = parse_point(alpha_text);

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    std::cout << "map " << map_text << ", alpha " << alpha_text << ", grid " << (max_m + 1) << "x"
              << max_n << "\n";

    GridReport serial, parallel;
    // warm both paths once so allocator effects do not skew the comparison
    run_ms(phi, alpha, max_m, max_n, GridExecution::serial, serial);

    double ts = run_ms(phi, alpha, max_m, max_n, GridExecution::serial, serial);
    double tp = run_ms(phi, alpha, max_m, max_n, GridExecution::parallel, parallel);

    std::cout << "serial:   " << ts << " ms\n";
    std::cout << "parallel: " << tp << " ms\n";
    std::cout << "speedup:  " << (tp > 0 ? ts / tp : 0.0) << "x\n";

    if (!same_reports(serial, parallel)) {
        std::cout << "MISMATCH between serial and parallel reports\n";
        return 1;
    }
    std::cout << "reports agree\n";
    return 0;
}
