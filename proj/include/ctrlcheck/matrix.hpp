// matrix.hpp — complex matrix carrier, structural predicates, commutators,
// real vectorization, and the skew-Hermitian matrix exponential.
#pragma once

#include <Eigen/Dense>

#include <complex>

namespace ctrlcheck {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Default tolerance for structural predicates and span/membership tests.
inline constexpr double kDefaultTol = 1e-10;

// Default tolerance for analytic inequality checks (relative to the largest
// magnitude among the compared quantities).
inline constexpr double kAnalyticTol = 1e-9;

// Structural predicates. The deviation from the defining identity is taken
// entrywise and compared against tol * max(1, largest entry magnitude), so
// the checks scale with the data instead of punishing large matrices.
bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);
bool is_skew_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);
bool is_unitary(const ComplexMatrix& m, double tol = kDefaultTol);

double frobenius_norm(const ComplexMatrix& m);
Complex trace_of(const ComplexMatrix& m);

// [a, b] = a*b - b*a. Throws std::invalid_argument on shape mismatch.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Real-linear vectorization of an n x n complex matrix: the real parts in
// column-major order, then the imaginary parts in column-major order, for a
// total length of 2*n*n. Preserves the Frobenius norm.
RealVector vectorize(const ComplexMatrix& m);

// Inverse of vectorize. The side length is recovered from the vector length;
// throws std::invalid_argument if the length is not of the form 2*n*n.
ComplexMatrix devectorize(const RealVector& v);

// exp(s) for skew-Hermitian s, via the eigendecomposition of the Hermitian
// matrix -i*s. Validates the input (throws std::invalid_argument) and always
// returns a unitary matrix. tol governs the input check only.
ComplexMatrix expm_skew(const ComplexMatrix& s, double tol = kDefaultTol);

} // namespace ctrlcheck
