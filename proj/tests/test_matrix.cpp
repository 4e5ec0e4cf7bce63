// test_matrix.cpp — matrix predicates, commutators, vectorization, and the
// skew-Hermitian exponential.

#include "ctrlcheck/kernels.hpp"
#include "ctrlcheck/matrix.hpp"
#include "ctrlcheck/models.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace ctrlcheck;
using testutil::max_entry_diff;

TEST_CASE("structural predicates accept and reject correctly") {
    ComplexMatrix h(2, 2);
    h << Complex(1.0, 0.0), Complex(0.0, 2.0), Complex(0.0, -2.0), Complex(3.0, 0.0);
    CHECK(is_hermitian(h));
    CHECK_FALSE(is_skew_hermitian(h));
    const ComplexMatrix s = Complex(0.0, 1.0) * h;
    CHECK(is_skew_hermitian(s));
    CHECK_FALSE(is_hermitian(s));
    CHECK(is_unitary(ComplexMatrix::Identity(3, 3)));
    CHECK_FALSE(is_unitary(2.0 * ComplexMatrix::Identity(3, 3)));

    // Deviations are judged relative to the entry scale.
    ComplexMatrix big = 1e8 * h;
    big(0, 1) += Complex(1e-4, 0.0);  // relative deviation 1e-12
    CHECK(is_hermitian(big, 1e-10));
    CHECK_FALSE(is_hermitian(big, 1e-14));
}

TEST_CASE("commutator examples") {
    const int n = 2;
    const ComplexMatrix a = gen_real(1, 2, n);

    SUBCASE("[A, A] is zero") {
        CHECK(frobenius_norm(commutator(a, a)) == 0.0);
    }
    SUBCASE("[real pair, imaginary pair] on one index pair") {
        // [e_12^R, e_12^I] = 2i(e_11 - e_22)
        ComplexMatrix want = ComplexMatrix::Zero(n, n);
        want(0, 0) = Complex(0.0, 2.0);
        want(1, 1) = Complex(0.0, -2.0);
        CHECK(max_entry_diff(commutator(gen_real(1, 2, n), gen_imag(1, 2, n)), want) == 0.0);
    }
    SUBCASE("chained real pairs") {
        // [e_12^R, e_23^R] = e_13^R
        CHECK(max_entry_diff(commutator(gen_real(1, 2, 3), gen_real(2, 3, 3)),
                             gen_real(1, 3, 3)) == 0.0);
    }
    SUBCASE("dimension mismatch is an error") {
        CHECK_THROWS_AS(commutator(a, ComplexMatrix::Zero(3, 3)), std::invalid_argument);
    }
}

TEST_CASE("commutator properties on random skew-Hermitian matrices") {
    std::mt19937 rng(31);
    for (int n : {2, 3, 4, 5, 6}) {
        const ComplexMatrix a = testutil::random_skew_hermitian(n, rng);
        const ComplexMatrix b = testutil::random_skew_hermitian(n, rng);
        const ComplexMatrix c = testutil::random_skew_hermitian(n, rng);

        // Antisymmetry is exact (identical arithmetic, negated).
        CHECK(max_entry_diff(commutator(a, b), ComplexMatrix(-commutator(b, a))) == 0.0);

        // Jacobi identity within 1e-12 relative to the operand scale.
        const ComplexMatrix jacobi = commutator(a, commutator(b, c)) +
                                     commutator(b, commutator(c, a)) +
                                     commutator(c, commutator(a, b));
        const double scale =
            frobenius_norm(a) * frobenius_norm(b) * frobenius_norm(c) + 1.0;
        CHECK(frobenius_norm(jacobi) <= 1e-12 * scale);

        // Brackets of skew-Hermitian matrices stay skew-Hermitian.
        CHECK(is_skew_hermitian(commutator(a, b), 1e-12));
    }
}

TEST_CASE("vectorize layout") {
    SUBCASE("zero matrix") {
        const RealVector v = vectorize(ComplexMatrix::Zero(2, 2));
        REQUIRE(v.size() == 8);
        CHECK(v.cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("i times identity lands in the imaginary slots of the diagonal") {
        const ComplexMatrix m = Complex(0.0, 1.0) * ComplexMatrix::Identity(2, 2);
        const RealVector v = vectorize(m);
        REQUIRE(v.size() == 8);
        // Column-major real parts first: all zero; imaginary parts of the
        // diagonal entries (1,1) and (2,2) sit at offsets 4+0 and 4+3.
        for (int k = 0; k < 4; ++k)
            CHECK(v[k] == 0.0);
        CHECK(v[4] == 1.0);
        CHECK(v[5] == 0.0);
        CHECK(v[6] == 0.0);
        CHECK(v[7] == 1.0);
    }
    SUBCASE("antisymmetric real pair occupies the real off-diagonal slots") {
        const RealVector v = vectorize(gen_real(1, 2, 2));
        // Column-major: (1,1)=0, (2,1)=-1, (1,2)=+1, (2,2)=0, then imaginary.
        CHECK(v[0] == 0.0);
        CHECK(v[1] == -1.0);
        CHECK(v[2] == 1.0);
        CHECK(v[3] == 0.0);
        for (int k = 4; k < 8; ++k)
            CHECK(v[k] == 0.0);
        CHECK(kernels::nrm2(8, v.data()) == doctest::Approx(std::sqrt(2.0)));
    }
}

TEST_CASE("vectorize is real-linear and preserves the Frobenius norm") {
    std::mt19937 rng(32);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int n : {2, 4, 5}) {
        const ComplexMatrix a = testutil::random_skew_hermitian(n, rng);
        const ComplexMatrix b = testutil::random_skew_hermitian(n, rng);
        const double alpha = u(rng), beta = u(rng);
        const RealVector lhs = vectorize(alpha * a + beta * b);
        const RealVector rhs = alpha * vectorize(a) + beta * vectorize(b);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-14);
        CHECK(kernels::nrm2(static_cast<std::size_t>(lhs.size()), lhs.data()) ==
              doctest::Approx(frobenius_norm(alpha * a + beta * b)).epsilon(1e-13));
    }
}

TEST_CASE("devectorize round-trips vectorize exactly") {
    std::mt19937 rng(33);
    for (int n : {2, 3, 6}) {
        const ComplexMatrix m = testutil::random_skew_hermitian(n, rng);
        const ComplexMatrix back = devectorize(vectorize(m));
        CHECK(max_entry_diff(m, back) == 0.0);
    }
    CHECK_THROWS_AS(devectorize(RealVector::Zero(6)), std::invalid_argument);
}

TEST_CASE("expm_skew examples") {
    SUBCASE("zero maps to identity") {
        const ComplexMatrix u = expm_skew(ComplexMatrix::Zero(3, 3));
        CHECK(max_entry_diff(u, ComplexMatrix::Identity(3, 3)) <= 1e-14);
    }
    SUBCASE("rotation generated by one imaginary pair") {
        // exp(theta * e_12^I) has cos(theta) on the (1,1),(2,2) entries,
        // i*sin(theta) on (1,2),(2,1), and the identity elsewhere.
        const double theta = 0.731;
        const ComplexMatrix u = expm_skew(theta * gen_imag(1, 2, 4));
        ComplexMatrix want = ComplexMatrix::Identity(4, 4);
        want(0, 0) = want(1, 1) = Complex(std::cos(theta), 0.0);
        want(0, 1) = want(1, 0) = Complex(0.0, std::sin(theta));
        CHECK(max_entry_diff(u, want) <= 1e-13);
    }
    SUBCASE("pi times i identity gives minus identity") {
        const ComplexMatrix s =
            Complex(0.0, 3.14159265358979323846) * ComplexMatrix::Identity(2, 2);
        CHECK(max_entry_diff(expm_skew(s), ComplexMatrix(-ComplexMatrix::Identity(2, 2))) <=
              1e-13);
    }
    SUBCASE("non-skew-Hermitian input is rejected") {
        ComplexMatrix h(2, 2);
        h << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(2, 0);
        CHECK_THROWS_AS(expm_skew(h), std::invalid_argument);
    }
}

TEST_CASE("expm_skew produces unitaries with unitary inverses") {
    std::mt19937 rng(34);
    for (int n : {2, 3, 5}) {
        const ComplexMatrix s = testutil::random_skew_hermitian(n, rng);
        const ComplexMatrix u = expm_skew(s);
        CHECK(is_unitary(u, 1e-12));
        CHECK(max_entry_diff(u * expm_skew(ComplexMatrix(-s)),
                             ComplexMatrix::Identity(n, n)) <= 1e-10);
    }
}

TEST_CASE("trace and frobenius norm") {
    CHECK(trace_of(ComplexMatrix::Identity(3, 3)) == Complex(3.0, 0.0));
    const ComplexMatrix h0 = build_h0(harmonic_levels(2));
    CHECK(trace_of(h0).real() == doctest::Approx(2.0));
    CHECK(trace_of(h0).imag() == 0.0);
    CHECK(frobenius_norm(gen_imag(1, 2, 5)) == doctest::Approx(std::sqrt(2.0)));
}
