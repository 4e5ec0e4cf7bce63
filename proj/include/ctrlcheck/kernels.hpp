// kernels.hpp — low-level dense kernels with serial and OpenMP variants.
//
// Every parallel variant computes each output element with the same
// summation order as the serial reference, so the two modes produce
// bit-identical results. This keeps reruns reproducible no matter how
// the binary was scheduled, and lets the tests compare modes exactly.
#pragma once

#include <complex>
#include <cstddef>

namespace ctrlcheck {
namespace kernels {

using Complex = std::complex<double>;

// Execution mode for the kernel layer. The default is serial; the CLI and
// the benchmark flip this explicitly.
enum class ExecMode { serial, parallel };

ExecMode exec_mode() noexcept;
void set_exec_mode(ExecMode mode) noexcept;

// Number of threads the parallel mode would use (1 when OpenMP is absent).
int max_threads() noexcept;

// y[i] += a * x[i]
void axpy(std::size_t n, double a, const double* x, double* y);

// x[i] *= a
void scal(std::size_t n, double a, double* x);

// Blocked dot product. Partial sums are taken over fixed-size blocks and
// combined in ascending block order, so the reduction tree is identical in
// both modes.
double dot(std::size_t n, const double* x, const double* y);

// Euclidean norm via the blocked dot product.
double nrm2(std::size_t n, const double* x);

// c = a*b - b*a for column-major dense complex n x n matrices.
// Each entry is a single k-ascending sum of fused (a*b - b*a) terms, so the
// result is independent of how columns are distributed across threads.
void commutator(std::size_t n, const Complex* a, const Complex* b, Complex* c);

} // namespace kernels
} // namespace ctrlcheck
