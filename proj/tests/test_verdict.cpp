// test_verdict.cpp — the aggregate analysis combining analytic criteria,
// numeric closure, witnesses, and the consistency cross-check.

#include "ctrlcheck/verdict.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ctrlcheck;

namespace {

SystemSpec make_spec(std::vector<double> levels, std::vector<double> dipoles) {
    SystemSpec s;
    s.levels = std::move(levels);
    s.dipoles = std::move(dipoles);
    return s;
}

bool has_criterion(const VerdictReport& r, CriterionId id) {
    return std::any_of(r.analytic.begin(), r.analytic.end(),
                       [&](const TheoremVerdict& v) { return v.theorem_id == id; });
}

} // namespace

TEST_CASE("controllable anharmonic chain") {
    const VerdictReport r = full_verdict(make_spec(morse_levels(4), sqrt_ladder_dipoles(4)));
    CHECK(r.numeric.dimension == 16);
    CHECK(r.numeric.n_squared == 16);
    CHECK(r.numeric.classification == AlgebraClass::full_u_n);
    CHECK(r.numeric.trace_nonzero);
    CHECK(r.numeric.passes >= 2);
    CHECK(r.numeric.commutators_evaluated > 0);
    CHECK(r.numeric.wall_time_ms >= 0.0);
    CHECK(r.consistent);
    CHECK(r.consistency_error.empty());

    // Unevenly spaced levels: both anharmonic checks run, no ladder checks.
    REQUIRE(r.analytic.size() == 2);
    CHECK(has_criterion(r, CriterionId::anharmonic_first));
    CHECK(has_criterion(r, CriterionId::anharmonic_last));
    CHECK(r.analytic[0].conclusion == Conclusion::full_u_n);
    CHECK(r.analytic[1].conclusion == Conclusion::full_u_n);

    // One witness per held hypothesis, all tight.
    REQUIRE(r.witnesses.size() == 2);
    for (const auto& w : r.witnesses)
        CHECK(w.relative_residual < 1e-8);
    CHECK(r.warnings.empty());
}

TEST_CASE("collapsed evenly spaced chain") {
    const VerdictReport r = full_verdict(make_spec(harmonic_levels(6), uniform_dipoles(6)));
    CHECK(r.numeric.dimension == 22);
    CHECK(r.numeric.n_squared == 36);
    CHECK(r.numeric.classification == AlgebraClass::proper_subalgebra);
    CHECK(r.consistent);

    // Equally spaced: both ladder conditions are reported too.
    REQUIRE(r.analytic.size() == 4);
    CHECK(has_criterion(r, CriterionId::harmonic_vlast));
    CHECK(has_criterion(r, CriterionId::harmonic_v1));
    for (const auto& v : r.analytic) {
        CHECK_FALSE(v.hypothesis_holds);
        CHECK(v.conclusion == Conclusion::inconclusive);
    }
    CHECK(r.witnesses.empty());  // nothing held, nothing to witness
}

TEST_CASE("evenly spaced chain rescued by the boosted edge coupling") {
    auto spec = make_spec(harmonic_levels(7), uniform_dipoles(7));
    spec.dipoles.back() = 2.0;
    const VerdictReport r = full_verdict(spec);
    CHECK(r.numeric.dimension == 49);
    CHECK(r.numeric.classification == AlgebraClass::full_u_n);
    CHECK(r.consistent);

    REQUIRE(r.analytic.size() == 4);
    // The anharmonic checks fail (all gaps equal) ...
    for (const auto& v : r.analytic)
        if (v.theorem_id == CriterionId::anharmonic_first ||
            v.theorem_id == CriterionId::anharmonic_last)
            CHECK_FALSE(v.hypothesis_holds);
    // ... but both ladder conditions hold, sharing a single witness entry.
    int held = 0;
    for (const auto& v : r.analytic)
        if (v.theorem_id == CriterionId::harmonic_vlast || v.theorem_id == CriterionId::harmonic_v1) {
            CHECK(v.hypothesis_holds);
            ++held;
        }
    CHECK(held == 2);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].relative_residual < 1e-8);
    CHECK((r.witnesses[0].theorem_id == CriterionId::harmonic_vlast ||
           r.witnesses[0].theorem_id == CriterionId::harmonic_v1));
}

TEST_CASE("witnesses can be disabled") {
    VerdictOptions opts;
    opts.with_witnesses = false;
    const VerdictReport r = full_verdict(make_spec(morse_levels(3), uniform_dipoles(3)), opts);
    CHECK(r.numeric.dimension == 9);
    CHECK(r.witnesses.empty());
    // The analytic verdicts themselves are unaffected.
    CHECK(r.analytic[0].hypothesis_holds);
}

TEST_CASE("traceless drift keeps routes consistent at dimension N^2 - 1") {
    auto spec = make_spec(morse_levels(4), uniform_dipoles(4));
    double mean = 0.0;
    for (double e : spec.levels)
        mean += e / static_cast<double>(spec.levels.size());
    for (double& e : spec.levels)
        e -= mean;
    const VerdictReport r = full_verdict(spec);
    CHECK(r.numeric.dimension == 15);
    CHECK(r.numeric.classification == AlgebraClass::su_n);
    CHECK_FALSE(r.numeric.trace_nonzero);
    CHECK(r.analytic[0].conclusion == Conclusion::at_least_su_n);
    CHECK(r.consistent);
}

TEST_CASE("the closure tolerance comes from the spec") {
    auto spec = make_spec(morse_levels(3), uniform_dipoles(3));
    spec.tolerance = 1e-6;
    const VerdictReport r = full_verdict(spec);
    CHECK(r.numeric.dimension == 9);
    CHECK(r.spec.tolerance == 1e-6);
}

TEST_CASE("invalid specs are rejected up front") {
    CHECK_THROWS_AS(full_verdict(make_spec({0.0, 1.0, 2.0}, {1.0, 0.0})), std::invalid_argument);
    CHECK_THROWS_WITH_AS(full_verdict(make_spec({0.0, 1.0}, {0.0})),
                         "decomposable system: d_1 = 0", std::invalid_argument);
}
