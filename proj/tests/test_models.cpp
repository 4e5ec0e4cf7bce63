// test_models.cpp — spectra, Hamiltonian builders, basis generators, and
// derived parameters.

#include "ctrlcheck/lie_engine.hpp"
#include "ctrlcheck/models.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace ctrlcheck;
using testutil::max_entry_diff;

TEST_CASE("harmonic and anharmonic spectra") {
    const auto h4 = harmonic_levels(4);
    REQUIRE(h4.size() == 4);
    CHECK(h4[0] == doctest::Approx(0.5));
    CHECK(h4[1] == doctest::Approx(1.5));
    CHECK(h4[2] == doctest::Approx(2.5));
    CHECK(h4[3] == doctest::Approx(3.5));

    const auto m3 = morse_levels(3, 0.0419);
    REQUIRE(m3.size() == 3);
    CHECK(m3[0] == doctest::Approx(0.4947625).epsilon(1e-12));
    CHECK(m3[1] == doctest::Approx(1.4528625).epsilon(1e-12));
    CHECK(m3[2] == doctest::Approx(2.3690625).epsilon(1e-12));

    // The anharmonic spectrum tends to the evenly spaced one as the
    // anharmonicity vanishes (the parameter itself must stay positive).
    const auto nearly = morse_levels(5, 1e-12);
    const auto target = harmonic_levels(5);
    for (std::size_t k = 0; k < nearly.size(); ++k)
        CHECK(nearly[k] == doctest::Approx(target[k]).epsilon(1e-10));
    CHECK_THROWS_AS(morse_levels(5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(morse_levels(5, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(harmonic_levels(1), std::invalid_argument);
}

TEST_CASE("two-value degenerate ladders") {
    CHECK(degenerate_levels(4, 0.0, 1.0, DegeneratePattern::first_distinct) ==
          std::vector<double>{0.0, 1.0, 1.0, 1.0});
    CHECK(degenerate_levels(4, 0.0, 1.0, DegeneratePattern::last_distinct) ==
          std::vector<double>{0.0, 0.0, 0.0, 1.0});
    CHECK(degenerate_levels(2, 0.0, 1.0, DegeneratePattern::first_distinct) ==
          std::vector<double>{0.0, 1.0});
    CHECK(degenerate_levels(2, 0.0, 1.0, DegeneratePattern::last_distinct) ==
          std::vector<double>{0.0, 1.0});
    CHECK_THROWS_AS(degenerate_levels(3, 1.0, 1.0, DegeneratePattern::first_distinct),
                    std::invalid_argument);
}

TEST_CASE("Hamiltonian builders") {
    const ComplexMatrix h0 = build_h0(harmonic_levels(3));
    CHECK(h0(0, 0) == Complex(0.5, 0.0));
    CHECK(h0(1, 1) == Complex(1.5, 0.0));
    CHECK(h0(2, 2) == Complex(2.5, 0.0));
    CHECK(h0(0, 1) == Complex(0.0, 0.0));

    const ComplexMatrix h1 = build_h1({1.0, std::sqrt(2.0), std::sqrt(3.0)});
    CHECK(is_hermitian(h1));
    CHECK(std::abs(trace_of(h1)) == 0.0);
    CHECK(h1(0, 1).real() == doctest::Approx(1.0));
    CHECK(h1(1, 2).real() == doctest::Approx(std::sqrt(2.0)));
    CHECK(h1(2, 3).real() == doctest::Approx(std::sqrt(3.0)));
    CHECK(h1(0, 2) == Complex(0.0, 0.0));
    CHECK(h1(1, 1) == Complex(0.0, 0.0));

    const ComplexMatrix simple = build_h1({1.0});
    CHECK(simple(0, 1) == Complex(1.0, 0.0));
    CHECK(simple(1, 0) == Complex(1.0, 0.0));
}

TEST_CASE("spec validation") {
    SystemSpec spec;
    spec.levels = {0.0, 1.0, 2.0};
    spec.dipoles = {1.0, 0.0};
    CHECK_THROWS_WITH_AS(spec.validate(), "decomposable system: d_2 = 0",
                         std::invalid_argument);
    spec.dipoles = {1.0};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);  // wrong count
    spec.dipoles = {1.0, 2.0};
    CHECK_NOTHROW(spec.validate());
    spec.levels = {0.0};
    spec.dipoles = {};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);  // too small
}

TEST_CASE("basis generator matrices") {
    SUBCASE("displayed forms") {
        // e_12^R at N=2 is [[0,1],[-1,0]].
        const ComplexMatrix r = gen_real(1, 2, 2);
        CHECK(r(0, 1) == Complex(1.0, 0.0));
        CHECK(r(1, 0) == Complex(-1.0, 0.0));
        CHECK(r(0, 0) == Complex(0.0, 0.0));

        // e_12^I at N=4 has i at (1,2) and (2,1), zero elsewhere.
        const ComplexMatrix im = gen_imag(1, 2, 4);
        CHECK(im(0, 1) == Complex(0.0, 1.0));
        CHECK(im(1, 0) == Complex(0.0, 1.0));
        CHECK(im.cwiseAbs().sum() == doctest::Approx(2.0));

        // The diagonal difference carries the skew-Hermitian factor i.
        const ComplexMatrix h = gen_diag(1, 2);
        CHECK(h(0, 0) == Complex(0.0, 1.0));
        CHECK(h(1, 1) == Complex(0.0, -1.0));
    }
    SUBCASE("all generators are skew-Hermitian and traceless") {
        for (int n : {2, 3, 5}) {
            for (int a = 1; a < n; ++a) {
                for (int b = a + 1; b <= n; ++b) {
                    CHECK(is_skew_hermitian(gen_real(a, b, n)));
                    CHECK(is_skew_hermitian(gen_imag(a, b, n)));
                    CHECK(std::abs(trace_of(gen_real(a, b, n))) == 0.0);
                    CHECK(std::abs(trace_of(gen_imag(a, b, n))) == 0.0);
                }
                CHECK(is_skew_hermitian(gen_diag(a, n)));
                CHECK(std::abs(trace_of(gen_diag(a, n))) == 0.0);
            }
        }
    }
    SUBCASE("the full generator set has rank N^2 - 1") {
        for (int n : {2, 3, 4, 6}) {
            SpanBasis basis(n);
            int count = 0;
            for (int a = 1; a <= n; ++a) {
                for (int b = a + 1; b <= n; ++b) {
                    CHECK(basis.add(gen_real(a, b, n)).added);
                    CHECK(basis.add(gen_imag(a, b, n)).added);
                    count += 2;
                }
            }
            for (int a = 1; a < n; ++a) {
                CHECK(basis.add(gen_diag(a, n)).added);
                ++count;
            }
            CHECK(count == n * n - 1);
            CHECK(basis.rank() == n * n - 1);
        }
    }
    SUBCASE("index validation") {
        CHECK_THROWS_AS(gen_real(2, 2, 3), std::invalid_argument);
        CHECK_THROWS_AS(gen_imag(0, 1, 3), std::invalid_argument);
        CHECK_THROWS_AS(gen_imag(1, 4, 3), std::invalid_argument);
        CHECK_THROWS_AS(gen_diag(3, 3), std::invalid_argument);
    }
}

TEST_CASE("bracket relations among pair generators hold for every index order") {
    // With the antisymmetric/symmetric exchange conventions, for all triples
    // of distinct indices: [eR(n,n'), eR(n',n'')] = eR(n,n''),
    // [eR(n,n'), eI(n',n'')] = eI(n,n''), and on a shared pair
    // [eR(n,n'), eI(n',n)] = 2i(e_nn - e_n'n').
    for (int n = 2; n <= 6; ++n) {
        for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
                if (a == b)
                    continue;
                const ComplexMatrix lhs =
                    commutator(testutil::pair_real(a, b, n), testutil::pair_imag(b, a, n));
                const ComplexMatrix want =
                    Complex(0.0, 2.0) *
                    (testutil::unit_matrix(a, a, n) - testutil::unit_matrix(b, b, n));
                CHECK(max_entry_diff(lhs, want) == 0.0);
                for (int c = 1; c <= n; ++c) {
                    if (c == a || c == b)
                        continue;
                    CHECK(max_entry_diff(commutator(testutil::pair_real(a, b, n),
                                                    testutil::pair_real(b, c, n)),
                                         testutil::pair_real(a, c, n)) == 0.0);
                    CHECK(max_entry_diff(commutator(testutil::pair_real(a, b, n),
                                                    testutil::pair_imag(b, c, n)),
                                         testutil::pair_imag(a, c, n)) == 0.0);
                }
            }
        }
    }
}

TEST_CASE("raising and lowering pair combinations") {
    const int n = 3;
    CHECK(max_entry_diff(gen_plus(1, n),
                         ComplexMatrix(gen_imag(1, 2, n) + gen_real(1, 2, n))) == 0.0);
    CHECK(max_entry_diff(gen_minus(1, n),
                         ComplexMatrix(gen_imag(1, 2, n) - gen_real(1, 2, n))) == 0.0);
}

TEST_CASE("derived parameters") {
    SUBCASE("transition frequencies keep their sign") {
        SystemSpec spec;
        spec.levels = {0.5, 1.5, 2.5};
        spec.dipoles = {1.0, 1.0};
        const DerivedParams p = derived_params(spec);
        REQUIRE(p.mu.size() == 2);
        CHECK(p.mu[0] == doctest::Approx(-1.0));
        CHECK(p.mu[1] == doctest::Approx(-1.0));
        CHECK(p.trace_h0 == doctest::Approx(4.5));
    }
    SUBCASE("ladder parameters match the worked examples") {
        SystemSpec spec;
        spec.levels = harmonic_levels(5);

        spec.dipoles = sqrt_ladder_dipoles(5);
        auto v = derived_params(spec).v;
        REQUIRE(v.size() == 4);
        CHECK(std::abs(v[0]) < 1e-14);
        CHECK(std::abs(v[1]) < 1e-14);
        CHECK(std::abs(v[2]) < 1e-14);
        CHECK(v[3] == doctest::Approx(5.0));

        spec.dipoles = uniform_dipoles(5);
        v = derived_params(spec).v;
        CHECK(v == std::vector<double>{1.0, 0.0, 0.0, 1.0});

        spec.dipoles = {1.0, 1.0, 1.0, 2.0};
        v = derived_params(spec).v;
        CHECK(v == std::vector<double>{1.0, 0.0, -3.0, 7.0});
    }
    SUBCASE("square-root ladder separates the top parameter by exactly N") {
        for (int n : {3, 4, 6, 8}) {
            SystemSpec spec;
            spec.levels = harmonic_levels(n);
            spec.dipoles = sqrt_ladder_dipoles(n);
            const auto v = derived_params(spec).v;
            for (std::size_t k = 0; k + 1 < v.size(); ++k)
                CHECK(v.back() - v[k] == doctest::Approx(static_cast<double>(n)));
        }
    }
    SUBCASE("minimal chain uses the implicit boundary") {
        SystemSpec spec;
        spec.levels = {0.0, 1.0};
        spec.dipoles = {3.0};
        const auto v = derived_params(spec).v;
        REQUIRE(v.size() == 1);
        CHECK(v[0] == doctest::Approx(18.0));  // 2 d_1^2
    }
}

TEST_CASE("reversed relabels the chain") {
    SystemSpec spec;
    spec.levels = {0.1, 0.9, 2.2};
    spec.dipoles = {1.0, 2.0};
    const SystemSpec r = reversed(spec);
    CHECK(r.levels == std::vector<double>{2.2, 0.9, 0.1});
    CHECK(r.dipoles == std::vector<double>{2.0, 1.0});
}

TEST_CASE("generator pairing for the closure seeds") {
    SystemSpec spec;
    spec.levels = harmonic_levels(3);
    spec.dipoles = uniform_dipoles(3);
    const auto gens = control_system_generators(spec);
    REQUIRE(gens.size() == 2);
    CHECK(is_skew_hermitian(gens[0]));
    CHECK(is_skew_hermitian(gens[1]));
    CHECK(gens[0](0, 0) == Complex(0.0, 0.5));
    CHECK(gens[1](0, 1) == Complex(0.0, 1.0));
}
