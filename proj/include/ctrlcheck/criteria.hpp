// criteria.hpp — analytic sufficient criteria for complete controllability of
// a nearest-neighbour chain driven by one field, plus constructive witnesses
// that replay each criterion's elimination argument numerically.
//
// All criteria share one conclusion ladder: when the hypothesis holds, the
// generated algebra contains at least the traceless subalgebra su(N), and is
// all of u(N) exactly when the drift Hamiltonian has nonzero trace.
#pragma once

#include "ctrlcheck/matrix.hpp"
#include "ctrlcheck/models.hpp"

#include <string>
#include <vector>

namespace ctrlcheck {

// The analytic criteria:
//   anharmonic_first — the 1-2 transition frequency is nonzero and unique in
//                      magnitude among all transition frequencies
//   anharmonic_last  — mirror statement for the (N-1)-N transition
//   harmonic_vlast   — equally spaced levels with v_n != v_{N-1}, n <= N-2
//   harmonic_v1      — equally spaced levels with v_n != v_1, n >= 2
enum class CriterionId { anharmonic_first, anharmonic_last, harmonic_v1, harmonic_vlast };

std::string to_string(CriterionId id);  // "anharmonic-first", ...

enum class Conclusion { full_u_n, at_least_su_n, inconclusive };

std::string to_string(Conclusion c);  // "U(N)", "at-least-SU(N)", "inconclusive"

struct TheoremVerdict {
    CriterionId theorem_id{CriterionId::anharmonic_first};
    bool hypothesis_holds{false};
    bool trace_nonzero{false};
    // full_u_n iff hypothesis_holds && trace_nonzero; at_least_su_n iff
    // hypothesis_holds && !trace_nonzero; inconclusive otherwise.
    Conclusion conclusion{Conclusion::inconclusive};
    // 1-based indices n whose compared quantity collided with the
    // distinguished one (the distinguished index itself when its own gap or
    // ladder check degenerates, e.g. mu_1 = 0).
    std::vector<int> failing_indices;
    // Gaps that cleared the tolerance by less than two orders of magnitude.
    std::vector<std::string> warnings;
};

// Anharmonicity criteria. Throw std::invalid_argument on an invalid spec.
TheoremVerdict check_anharmonic_first(const SystemSpec& spec, double tol = kAnalyticTol);
TheoremVerdict check_anharmonic_last(const SystemSpec& spec, double tol = kAnalyticTol);

// True when the mu_n agree with their mean to a relative deviation of tol
// and the mean is nonzero (a fully degenerate spectrum is not a ladder).
bool equally_spaced(const SystemSpec& spec, double tol = kAnalyticTol);

// Individual ladder conditions and their disjunction. All three throw
// std::invalid_argument when the levels are not equally spaced. The combined
// check reports the condition that fired (vlast preferred when both hold)
// or, when neither holds, the union of both failing-index sets.
TheoremVerdict check_harmonic_vlast(const SystemSpec& spec, double tol = kAnalyticTol);
TheoremVerdict check_harmonic_v1(const SystemSpec& spec, double tol = kAnalyticTol);
TheoremVerdict check_harmonic(const SystemSpec& spec, double tol = kAnalyticTol);

// A constructive witness: the elimination sequence of a criterion evaluated
// in matrix arithmetic. `produced` is the final matrix, expected to equal
// coefficient * (canonical target element); relative_residual is
// ||produced/coefficient - target||_F / ||target||_F, and for routes that
// verify several identities it is the worst of them.
struct Witness {
    CriterionId theorem_id{CriterionId::anharmonic_first};
    std::string target;  // e.g. "e_{1,2}^I"
    double coefficient{0.0};
    double relative_residual{0.0};
    ComplexMatrix produced;
};

// Replays the anharmonic elimination: starting from V = i*H_1, the
// double-commutator recurrence with i*H_0 peels one squared transition
// frequency per step, landing on the (1,2) pair generators (first) or the
// (N-1,N) pair generators (mirrored variant). Throws std::invalid_argument
// if the corresponding hypothesis does not hold.
Witness witness_anharmonic(const SystemSpec& spec, double tol = kAnalyticTol);
Witness witness_anharmonic_last(const SystemSpec& spec, double tol = kAnalyticTol);

// Replays the ladder elimination: splits i*H_1 into raising/lowering sums,
// forms the diagonal bracket element, then peels one v_n per step to isolate
// the edge raising/lowering pair. Runs every ladder condition that holds and
// returns the worst-residual route. Throws std::invalid_argument if neither
// condition holds.
Witness witness_harmonic(const SystemSpec& spec, double tol = kAnalyticTol);

// Strips the global phase from a unitary: v = exp(-i*phase/N) * u with
// det(v) = 1 and phase = arg det(u) in (-pi, pi].
struct PhaseStripped {
    ComplexMatrix v;
    double phase{0.0};
};
PhaseStripped su_representative(const ComplexMatrix& u, double tol = kDefaultTol);

// Frobenius norm of u*rho0*u^dagger - v*rho0*v^dagger with v the
// phase-stripped representative of u — zero in exact arithmetic, showing the
// phase direction never affects density-matrix evolution. Validates that u is
// unitary and rho0 is a density matrix (Hermitian, positive semidefinite,
// unit trace); throws std::invalid_argument otherwise.
double density_evolution_equivalence(const ComplexMatrix& u, const ComplexMatrix& rho0,
                                     double tol = kDefaultTol);

} // namespace ctrlcheck
