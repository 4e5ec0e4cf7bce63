// lie_engine.hpp — incremental real span of skew-Hermitian matrices and the
// commutator-closure engine that computes the dimension of the dynamical
// algebra generated by a set of matrices.
#pragma once

#include "ctrlcheck/matrix.hpp"

#include <string>
#include <vector>

namespace ctrlcheck {

// How a closure run classifies the generated algebra relative to the full
// space of skew-Hermitian matrices:
//   full_u_n          — dimension N^2 (complete controllability)
//   su_n              — dimension N^2-1 and the identity direction i*I is
//                       absent (everything but a global phase)
//   proper_subalgebra — anything else
enum class AlgebraClass { full_u_n, su_n, proper_subalgebra };

std::string to_string(AlgebraClass c);

struct SpanAddResult {
    bool added{false};
    double residual_ratio{0.0};  // residual norm / candidate norm
};

struct MembershipResult {
    bool member{false};
    double residual{0.0};  // relative projection residual
};

// Incrementally maintained orthonormal basis for the real span of vectorized
// n x n complex matrices (ambient dimension 2*n*n). Candidates are reduced
// with modified Gram-Schmidt plus one full re-orthogonalization pass; a
// candidate is accepted when its relative residual exceeds the tolerance.
// Residual ratios in (tol, 100*tol] are accepted but recorded as warnings.
class SpanBasis {
public:
    SpanBasis() = default;
    explicit SpanBasis(int matrix_dim, double tol = kDefaultTol);

    int matrix_dim() const { return n_; }
    int ambient_dim() const { return ambient_; }
    int rank() const { return rank_; }
    double tol() const { return tol_; }

    // Inserts m into the span if it is independent of the current basis.
    // Throws std::runtime_error if the rank would exceed 2*n*n (the ambient
    // dimension bounds the rank; exceeding it means the arithmetic is
    // inconsistent).
    SpanAddResult add(const ComplexMatrix& m);

    // Relative projection residual of m against the span (0 for the zero
    // matrix, which is a member of every subspace).
    double membership_residual(const ComplexMatrix& m) const;
    bool contains(const ComplexMatrix& m) const { return membership_residual(m) <= tol_; }

    // The matrices that were accepted, in insertion order (not orthonormal).
    const std::vector<ComplexMatrix>& originals() const { return originals_; }

    const std::vector<std::string>& warnings() const { return warnings_; }

    // Row k of the orthonormal basis (length ambient_dim()).
    const double* basis_row(int k) const;

private:
    friend struct ClosureRunner;

    // Two-pass modified Gram-Schmidt of v (length ambient_) against the
    // first `upto` rows; returns the norm of what is left.
    double reduce_against(double* v, int upto) const;
    // Shared accept/reject decision once a candidate has been reduced.
    SpanAddResult decide(std::vector<double>&& reduced, const ComplexMatrix& original,
                         double norm_before, double norm_after);

    int n_{0};
    int ambient_{0};
    int rank_{0};
    double tol_{kDefaultTol};
    std::vector<double> rows_;  // rank_ contiguous rows of length ambient_
    std::vector<ComplexMatrix> originals_;
    std::vector<std::string> warnings_;
};

MembershipResult is_member(const SpanBasis& basis, const ComplexMatrix& m);

struct ClosureResult {
    int dimension{0};
    AlgebraClass classification{AlgebraClass::proper_subalgebra};
    int passes{0};
    long long commutators_evaluated{0};
    SpanBasis basis;
};

// Generates the smallest real Lie algebra containing the given skew-Hermitian
// matrices: seeds a span with the independent generators, then repeatedly
// commutes every element added in the previous pass with every earlier
// element, inserting independent results, until no pass adds anything or the
// rank reaches N^2. Each candidate commutator is normalized to unit Frobenius
// norm before the independence test; commutators that vanish to round-off are
// skipped. In parallel mode candidates are evaluated speculatively against a
// rank snapshot and replayed in serial order whenever the snapshot went
// stale, so the accepted basis is bit-identical to the serial reference.
ClosureResult generate_lie_algebra(const std::vector<ComplexMatrix>& generators,
                                   double tol = kDefaultTol);

// Classification diagnostics for a finished closure.
struct ClassifyResult {
    AlgebraClass classification{AlgebraClass::proper_subalgebra};
    bool trace_nonzero{false};  // trace of the drift Hamiltonian H_0
};

// Combines the closure classification with the trace diagnostic on H_0
// (a traceless drift can at best generate the traceless subalgebra).
ClassifyResult classify(const ClosureResult& result, const ComplexMatrix& h0);

} // namespace ctrlcheck
