// models.hpp — system description (levels + dipoles), model spectra,
// Hamiltonian builders, canonical skew-Hermitian basis elements, and the
// derived gap/ladder parameters the analytic criteria consume.
#pragma once

#include "ctrlcheck/matrix.hpp"

#include <string>
#include <vector>

namespace ctrlcheck {

// Default anharmonicity for the Morse-oscillator spectrum.
inline constexpr double kMorseB = 0.0419;

// An N-level system driven by a single field: diagonal energies E_1..E_N and
// nearest-neighbour dipole couplings d_1..d_{N-1}.
struct SystemSpec {
    std::vector<double> levels;
    std::vector<double> dipoles;
    double tolerance{kDefaultTol};
    std::string label;

    int dim() const { return static_cast<int>(levels.size()); }

    // Throws std::invalid_argument on: N < 2, dipole count != N-1, any
    // non-finite value, or a zero dipole (the chain decomposes into
    // non-interacting blocks and the single-field model breaks down).
    void validate() const;
};

// Gap parameters mu_n = E_n - E_{n+1} (sign preserved), the ladder
// parameters v_n built from the dipoles (meaningful for equally spaced
// levels), and the trace of H_0.
struct DerivedParams {
    std::vector<double> mu;
    std::vector<double> v;
    double trace_h0{0.0};
};

// Model spectra.
std::vector<double> harmonic_levels(int n);                      // E_k = k - 1/2
std::vector<double> morse_levels(int n, double b = kMorseB);     // throws if b <= 0
// Two-value degenerate ladders: (e1, e2, e2, ..., e2) or (e1, e1, ..., e1, e2).
enum class DegeneratePattern { first_distinct, last_distinct };
std::vector<double> degenerate_levels(int n, double e1, double e2, DegeneratePattern pattern);

// Stock dipole families.
std::vector<double> sqrt_ladder_dipoles(int n);                  // d_k = sqrt(k)
std::vector<double> uniform_dipoles(int n, double value = 1.0);  // d_k = value

// Hamiltonian builders. H_0 is diagonal; H_1 is real symmetric tridiagonal
// with zero diagonal and off-diagonal entries d_k.
ComplexMatrix build_h0(const std::vector<double>& levels);
ComplexMatrix build_h1(const std::vector<double>& dipoles);

// Skew-Hermitian generators {i*H_0, i*H_1} the closure engine consumes.
std::vector<ComplexMatrix> control_system_generators(const SystemSpec& spec);

// Canonical traceless basis elements (1-based indices, require a < b):
//   gen_real(a,b): e_{ab} - e_{ba}            (real antisymmetric pair)
//   gen_imag(a,b): i*(e_{ab} + e_{ba})        (imaginary symmetric pair)
//   gen_diag(a):   i*(e_{aa} - e_{a+1,a+1})   (neighbouring diagonal difference)
// All are skew-Hermitian. Out-of-range indices throw std::invalid_argument.
ComplexMatrix gen_real(int a, int b, int dim);
ComplexMatrix gen_imag(int a, int b, int dim);
ComplexMatrix gen_diag(int a, int dim);

// Raising/lowering combinations e^{+-}_{a,a+1} = gen_imag +- gen_real, used
// by the equally-spaced constructive route.
ComplexMatrix gen_plus(int a, int dim);
ComplexMatrix gen_minus(int a, int dim);

// mu_n, v_n and trace(H_0) for a validated spec. The v_n use the convention
// v_n = w_n - w_{n+1} with w the diagonal of i^{-1} * (1/4)[V+, V-], which
// amounts to the three-case dipole formula with implicit d_0 = d_N = 0.
DerivedParams derived_params(const SystemSpec& spec);

// The same physical chain with states relabelled n -> N+1-n (levels and
// dipoles reversed). Used by the mirrored anharmonicity criterion.
SystemSpec reversed(const SystemSpec& spec);

} // namespace ctrlcheck
