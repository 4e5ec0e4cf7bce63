// bench_closure.cpp — compares the serial reference closure against the
// OpenMP variant on ladder systems of growing size, verifying that both
// modes deliver identical results before reporting timings.
//
//   bench_closure [--min-n K] [--max-n K] [--reps R]

#include "ctrlcheck/kernels.hpp"
#include "ctrlcheck/lie_engine.hpp"
#include "ctrlcheck/models.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstring>
#include <iomanip>
#include <iostream>

namespace {

using ctrlcheck::ClosureResult;
using ctrlcheck::kernels::ExecMode;

double best_of(int reps, const std::vector<ctrlcheck::ComplexMatrix>& gens, double tol,
               ClosureResult& out) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        out = ctrlcheck::generate_lie_algebra(gens, tol);
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

bool identical_bases(const ctrlcheck::SpanBasis& a, const ctrlcheck::SpanBasis& b) {
    if (a.rank() != b.rank() || a.ambient_dim() != b.ambient_dim())
        return false;
    const std::size_t bytes = sizeof(double) * static_cast<std::size_t>(a.ambient_dim());
    for (int k = 0; k < a.rank(); ++k)
        if (std::memcmp(a.basis_row(k), b.basis_row(k), bytes) != 0)
            return false;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    int min_n = 4;
    int max_n = 16;
    int reps = 3;
    CLI::App app{"closure benchmark: serial reference vs OpenMP kernels"};
    app.add_option("--min-n", min_n, "smallest system size (default 4)");
    app.add_option("--max-n", max_n, "largest system size (default 16)");
    app.add_option("--reps", reps, "repetitions per measurement (default 3)");
    CLI11_PARSE(app, argc, argv);
    if (min_n < 2 || max_n < min_n || reps < 1) {
        std::cerr << "bench_closure: need 2 <= min-n <= max-n and reps >= 1\n";
        return 2;
    }

    std::cout << "threads available: " << ctrlcheck::kernels::max_threads() << "\n\n";
    std::cout << std::left << std::setw(6) << "N" << std::right << std::setw(10) << "dim"
              << std::setw(14) << "serial ms" << std::setw(14) << "parallel ms" << std::setw(10)
              << "speedup" << std::setw(12) << "identical" << "\n";

    bool all_identical = true;
    for (int n = min_n; n <= max_n; ++n) {
        // Anharmonic ladder with generic couplings: the closure reaches the
        // full N^2, which is the worst case for the engine.
        ctrlcheck::SystemSpec spec;
        spec.levels = ctrlcheck::morse_levels(n);
        spec.dipoles = ctrlcheck::sqrt_ladder_dipoles(n);
        const auto gens = ctrlcheck::control_system_generators(spec);

        ClosureResult serial_result, parallel_result;
        ctrlcheck::kernels::set_exec_mode(ExecMode::serial);
        const double serial_ms = best_of(reps, gens, spec.tolerance, serial_result);
        ctrlcheck::kernels::set_exec_mode(ExecMode::parallel);
        const double parallel_ms = best_of(reps, gens, spec.tolerance, parallel_result);
        ctrlcheck::kernels::set_exec_mode(ExecMode::serial);

        const bool same = identical_bases(serial_result.basis, parallel_result.basis) &&
                          serial_result.dimension == parallel_result.dimension &&
                          serial_result.commutators_evaluated ==
                              parallel_result.commutators_evaluated;
        all_identical = all_identical && same;

        std::cout << std::left << std::setw(6) << n << std::right << std::setw(10)
                  << serial_result.dimension << std::setw(14) << std::fixed
                  << std::setprecision(2) << serial_ms << std::setw(14) << parallel_ms
                  << std::setw(10) << std::setprecision(2) << (serial_ms / parallel_ms)
                  << std::setw(12) << (same ? "yes" : "NO") << "\n";
    }
    if (!all_identical) {
        std::cerr << "\nbench_closure: parallel results diverged from the serial reference\n";
        return 1;
    }
    return 0;
}
