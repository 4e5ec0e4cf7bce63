// verdict.hpp — aggregate analysis of one system: every applicable analytic
// criterion, the numeric closure, constructive witnesses, and a consistency
// cross-check between the two routes.
#pragma once

#include "ctrlcheck/criteria.hpp"
#include "ctrlcheck/lie_engine.hpp"
#include "ctrlcheck/models.hpp"

#include <string>
#include <vector>

namespace ctrlcheck {

struct NumericSummary {
    int dimension{0};
    int n_squared{0};
    AlgebraClass classification{AlgebraClass::proper_subalgebra};
    bool trace_nonzero{false};
    int passes{0};
    long long commutators_evaluated{0};
    // Measured always, serialized only on request: reports must be
    // byte-identical across reruns by default.
    double wall_time_ms{0.0};
};

struct WitnessSummary {
    CriterionId theorem_id{CriterionId::anharmonic_first};
    std::string target;
    double coefficient{0.0};
    double relative_residual{0.0};
};

struct VerdictReport {
    SystemSpec spec;
    NumericSummary numeric;
    std::vector<TheoremVerdict> analytic;
    std::vector<WitnessSummary> witnesses;
    std::vector<std::string> warnings;
    // False when an analytic conclusion contradicts the numeric dimension
    // (U(N) without dimension N^2, or at-least-SU(N) with dimension below
    // N^2-1); the mismatch is described, never silently dropped.
    bool consistent{true};
    std::string consistency_error;
};

struct VerdictOptions {
    double analytic_tol{kAnalyticTol};
    bool with_witnesses{true};
};

// Runs the full analysis. The closure tolerance comes from spec.tolerance.
// Throws std::invalid_argument on an invalid spec.
VerdictReport full_verdict(const SystemSpec& spec, const VerdictOptions& opts = {});

} // namespace ctrlcheck
