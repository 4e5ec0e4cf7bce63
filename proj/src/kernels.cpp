// kernels.cpp — serial reference kernels and their OpenMP twins.

#include "ctrlcheck/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ctrlcheck {
namespace kernels {

namespace {

// Fixed block length for the dot-product reduction. Must not depend on the
// thread count, or the reduction order (and hence the rounding) would drift
// between modes.
constexpr std::size_t kDotBlock = 512;

// Minimum problem sizes below which the parallel variants fall back to the
// serial path; spawning threads for tiny vectors only adds overhead.
constexpr std::size_t kParMinVec = 1 << 13;
constexpr std::size_t kParMinDim = 48;

std::atomic<ExecMode> g_mode{ExecMode::serial};

bool parallel_enabled() noexcept {
#ifdef _OPENMP
    return g_mode.load(std::memory_order_relaxed) == ExecMode::parallel;
#else
    return false;
#endif
}

} // namespace

ExecMode exec_mode() noexcept { return g_mode.load(std::memory_order_relaxed); }
void set_exec_mode(ExecMode mode) noexcept { g_mode.store(mode, std::memory_order_relaxed); }

int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void axpy(std::size_t n, double a, const double* x, double* y) {
    if (parallel_enabled() && n >= kParMinVec) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            y[i] += a * x[i];
        return;
    }
    for (std::size_t i = 0; i < n; ++i)
        y[i] += a * x[i];
}

void scal(std::size_t n, double a, double* x) {
    if (parallel_enabled() && n >= kParMinVec) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            x[i] *= a;
        return;
    }
    for (std::size_t i = 0; i < n; ++i)
        x[i] *= a;
}

namespace {

double dot_block(std::size_t len, const double* x, const double* y) {
    double s = 0.0;
    for (std::size_t i = 0; i < len; ++i)
        s += x[i] * y[i];
    return s;
}

} // namespace

double dot(std::size_t n, const double* x, const double* y) {
    if (n == 0)
        return 0.0;
    const std::size_t nblocks = (n + kDotBlock - 1) / kDotBlock;
    if (nblocks == 1)
        return dot_block(n, x, y);

    std::vector<double> partial(nblocks);
    if (parallel_enabled() && n >= kParMinVec) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
            const std::size_t off = static_cast<std::size_t>(b) * kDotBlock;
            partial[b] = dot_block(std::min(kDotBlock, n - off), x + off, y + off);
        }
    } else {
        for (std::size_t b = 0; b < nblocks; ++b) {
            const std::size_t off = b * kDotBlock;
            partial[b] = dot_block(std::min(kDotBlock, n - off), x + off, y + off);
        }
    }
    // Combine in ascending block order in both modes.
    double s = 0.0;
    for (std::size_t b = 0; b < nblocks; ++b)
        s += partial[b];
    return s;
}

double nrm2(std::size_t n, const double* x) {
    return std::sqrt(dot(n, x, x));
}

namespace {

// One output column of c = a*b - b*a. Accumulates over k in ascending order
// with the two rank-1 contributions fused, so the per-entry arithmetic is a
// fixed sequence regardless of threading.
void commutator_column(std::size_t n, const Complex* a, const Complex* b,
                       Complex* cj, std::size_t j) {
    for (std::size_t i = 0; i < n; ++i)
        cj[i] = Complex(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex bkj = b[k + j * n];
        const Complex akj = a[k + j * n];
        const Complex* ak = a + k * n;
        const Complex* bk = b + k * n;
        for (std::size_t i = 0; i < n; ++i)
            cj[i] += ak[i] * bkj - bk[i] * akj;
    }
}

} // namespace

void commutator(std::size_t n, const Complex* a, const Complex* b, Complex* c) {
    if (parallel_enabled() && n >= kParMinDim) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long long j = 0; j < static_cast<long long>(n); ++j)
            commutator_column(n, a, b, c + static_cast<std::size_t>(j) * n,
                              static_cast<std::size_t>(j));
        return;
    }
    for (std::size_t j = 0; j < n; ++j)
        commutator_column(n, a, b, c + j * n, j);
}

} // namespace kernels
} // namespace ctrlcheck
