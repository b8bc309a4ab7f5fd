// Compares the OpenMP kernels against their serial reference implementations:
// the fuzz campaign (parallel over states) and the roof optimizer (parallel
// over restarts). Also asserts that both paths agree bit for bit.

#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "qmono/convexroof.hpp"
#include "qmono/fuzz.hpp"
#include "qmono/linalg.hpp"
#include "qmono/states.hpp"

using namespace qmono;

namespace {

bool same_rows(const FuzzOutcome& a, const FuzzOutcome& b) {
    if (a.rows.size() != b.rows.size()) return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const CheckResult& x = a.rows[i].check;
        const CheckResult& y = b.rows[i].check;
        if (a.rows[i].state_id != b.rows[i].state_id || x.theorem_id != y.theorem_id ||
            x.margin != y.margin || x.lhs != y.lhs || x.rhs != y.rhs) {
            return false;
        }
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    int count = argc > 1 ? std::atoi(argv[1]) : 200;
    std::printf("threads: %d\n", omp_get_max_threads());

    FuzzConfig cfg;
    cfg.n_qubits = 3;
    cfg.count = count;
    cfg.seed = 20240817;

    double t0 = omp_get_wtime();
    FuzzOutcome serial = run_fuzz(cfg, Execution::serial);
    double t1 = omp_get_wtime();
    FuzzOutcome parallel = run_fuzz(cfg, Execution::parallel);
    double t2 = omp_get_wtime();
    std::printf("fuzz %d states:   serial %.3fs  parallel %.3fs  speedup %.2fx  identical %s\n",
                count, t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1),
                same_rows(serial, parallel) ? "yes" : "NO");

    RoofConfig roof;
    roof.seed = 7;
    const int roofs = 24;
    double s0 = omp_get_wtime();
    double acc_serial = 0.0;
    for (int i = 0; i < roofs; ++i) {
        Rng rng = Rng(99).split(i);
        const PureState psi = make_pure_state(3, haar_random_pure(3, rng));
        acc_serial += eoa_lower(reduce(psi, {0, 1}), roof, Execution::serial).value;
    }
    double s1 = omp_get_wtime();
    double acc_parallel = 0.0;
    for (int i = 0; i < roofs; ++i) {
        Rng rng = Rng(99).split(i);
        const PureState psi = make_pure_state(3, haar_random_pure(3, rng));
        acc_parallel += eoa_lower(reduce(psi, {0, 1}), roof, Execution::parallel).value;
    }
    double s2 = omp_get_wtime();
    std::printf("roof %d maximizations: serial %.3fs  parallel %.3fs  speedup %.2fx  identical %s\n",
                roofs, s1 - s0, s2 - s1, (s1 - s0) / (s2 - s1),
                acc_serial == acc_parallel ? "yes" : "NO");
    return 0;
}
