// models.cpp — implementation of the system model layer.

#include "ctrlcheck/models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ctrlcheck {

void SystemSpec::validate() const {
    if (levels.size() < 2)
        throw std::invalid_argument("system spec: at least two levels are required");
    if (dipoles.size() + 1 != levels.size())
        throw std::invalid_argument("system spec: expected exactly N-1 dipole couplings");
    for (double e : levels)
        if (!std::isfinite(e))
            throw std::invalid_argument("system spec: non-finite energy level");
    for (std::size_t k = 0; k < dipoles.size(); ++k) {
        if (!std::isfinite(dipoles[k]))
            throw std::invalid_argument("system spec: non-finite dipole coupling");
        if (dipoles[k] == 0.0)
            throw std::invalid_argument("decomposable system: d_" + std::to_string(k + 1) +
                                        " = 0");
    }
    if (!(tolerance > 0.0) || !std::isfinite(tolerance))
        throw std::invalid_argument("system spec: tolerance must be a positive finite number");
}

std::vector<double> harmonic_levels(int n) {
    if (n < 2)
        throw std::invalid_argument("harmonic_levels: need at least two levels");
    std::vector<double> e(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        e[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) - 0.5;
    return e;
}

std::vector<double> morse_levels(int n, double b) {
    if (n < 2)
        throw std::invalid_argument("morse_levels: need at least two levels");
    if (!(b > 0.0) || !std::isfinite(b))
        throw std::invalid_argument("morse_levels: anharmonicity must be positive");
    std::vector<double> e(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const double x = static_cast<double>(k) - 0.5;
        e[static_cast<std::size_t>(k - 1)] = x * (1.0 - b * x / 2.0);
    }
    return e;
}

std::vector<double> degenerate_levels(int n, double e1, double e2, DegeneratePattern pattern) {
    if (n < 2)
        throw std::invalid_argument("degenerate_levels: need at least two levels");
    if (e1 == e2)
        throw std::invalid_argument("degenerate_levels: the two level values must differ");
    std::vector<double> e(static_cast<std::size_t>(n), pattern == DegeneratePattern::first_distinct ? e2 : e1);
    if (pattern == DegeneratePattern::first_distinct)
        e.front() = e1;
    else
        e.back() = e2;
    return e;
}

std::vector<double> sqrt_ladder_dipoles(int n) {
    if (n < 2)
        throw std::invalid_argument("sqrt_ladder_dipoles: need at least two levels");
    std::vector<double> d(static_cast<std::size_t>(n - 1));
    for (int k = 1; k < n; ++k)
        d[static_cast<std::size_t>(k - 1)] = std::sqrt(static_cast<double>(k));
    return d;
}

std::vector<double> uniform_dipoles(int n, double value) {
    if (n < 2)
        throw std::invalid_argument("uniform_dipoles: need at least two levels");
    return std::vector<double>(static_cast<std::size_t>(n - 1), value);
}

ComplexMatrix build_h0(const std::vector<double>& levels) {
    const auto n = static_cast<Eigen::Index>(levels.size());
    ComplexMatrix h = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
        h(k, k) = Complex(levels[static_cast<std::size_t>(k)], 0.0);
    return h;
}

ComplexMatrix build_h1(const std::vector<double>& dipoles) {
    const auto n = static_cast<Eigen::Index>(dipoles.size()) + 1;
    ComplexMatrix h = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        const double d = dipoles[static_cast<std::size_t>(k)];
        h(k, k + 1) = Complex(d, 0.0);
        h(k + 1, k) = Complex(d, 0.0);
    }
    return h;
}

std::vector<ComplexMatrix> control_system_generators(const SystemSpec& spec) {
    spec.validate();
    const Complex i(0.0, 1.0);
    return {i * build_h0(spec.levels), i * build_h1(spec.dipoles)};
}

namespace {

void require_pair(int a, int b, int dim, const char* what) {
    if (dim < 2 || a < 1 || b <= a || b > dim)
        throw std::invalid_argument(std::string(what) + ": indices must satisfy 1 <= a < b <= dim");
}

} // namespace

ComplexMatrix gen_real(int a, int b, int dim) {
    require_pair(a, b, dim, "gen_real");
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    m(a - 1, b - 1) = Complex(1.0, 0.0);
    m(b - 1, a - 1) = Complex(-1.0, 0.0);
    return m;
}

ComplexMatrix gen_imag(int a, int b, int dim) {
    require_pair(a, b, dim, "gen_imag");
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    m(a - 1, b - 1) = Complex(0.0, 1.0);
    m(b - 1, a - 1) = Complex(0.0, 1.0);
    return m;
}

ComplexMatrix gen_diag(int a, int dim) {
    if (dim < 2 || a < 1 || a >= dim)
        throw std::invalid_argument("gen_diag: index must satisfy 1 <= a <= dim-1");
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    m(a - 1, a - 1) = Complex(0.0, 1.0);
    m(a, a) = Complex(0.0, -1.0);
    return m;
}

ComplexMatrix gen_plus(int a, int dim) {
    return gen_imag(a, a + 1, dim) + gen_real(a, a + 1, dim);
}

ComplexMatrix gen_minus(int a, int dim) {
    return gen_imag(a, a + 1, dim) - gen_real(a, a + 1, dim);
}

DerivedParams derived_params(const SystemSpec& spec) {
    spec.validate();
    const int n = spec.dim();
    DerivedParams p;
    p.mu.resize(static_cast<std::size_t>(n - 1));
    for (int k = 0; k + 1 < n; ++k)
        p.mu[static_cast<std::size_t>(k)] = spec.levels[static_cast<std::size_t>(k)] -
                                            spec.levels[static_cast<std::size_t>(k) + 1];
    // v_k = w_k - w_{k+1}, where w_k = d_k^2 - d_{k-1}^2 with implicit
    // d_0 = d_N = 0; equivalently the familiar three-case dipole formula.
    auto d2 = [&](int k) {
        if (k < 1 || k > n - 1)
            return 0.0;
        const double d = spec.dipoles[static_cast<std::size_t>(k - 1)];
        return d * d;
    };
    p.v.resize(static_cast<std::size_t>(n - 1));
    for (int k = 1; k <= n - 1; ++k)
        p.v[static_cast<std::size_t>(k - 1)] = (d2(k) - d2(k - 1)) - (d2(k + 1) - d2(k));
    p.trace_h0 = 0.0;
    for (double e : spec.levels)
        p.trace_h0 += e;
    return p;
}

SystemSpec reversed(const SystemSpec& spec) {
    SystemSpec r = spec;
    std::reverse(r.levels.begin(), r.levels.end());
    std::reverse(r.dipoles.begin(), r.dipoles.end());
    if (!r.label.empty())
        r.label += " (reversed)";
    return r;
}

} // namespace ctrlcheck
