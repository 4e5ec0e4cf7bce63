// matrix.cpp — implementation of the matrix utilities.

#include "ctrlcheck/matrix.hpp"
#include "ctrlcheck/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace ctrlcheck {

namespace {

double scaled_tol(const ComplexMatrix& m, double tol) {
    const double mag = m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
    return tol * std::max(1.0, mag);
}

void require_square(const ComplexMatrix& m, const char* what) {
    if (m.rows() != m.cols())
        throw std::invalid_argument(std::string(what) + ": matrix must be square");
}

} // namespace

bool is_hermitian(const ComplexMatrix& m, double tol) {
    require_square(m, "is_hermitian");
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= scaled_tol(m, tol);
}

bool is_skew_hermitian(const ComplexMatrix& m, double tol) {
    require_square(m, "is_skew_hermitian");
    return (m + m.adjoint()).cwiseAbs().maxCoeff() <= scaled_tol(m, tol);
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    require_square(m, "is_unitary");
    const ComplexMatrix eye = ComplexMatrix::Identity(m.rows(), m.cols());
    return (m * m.adjoint() - eye).cwiseAbs().maxCoeff() <= scaled_tol(m, tol);
}

double frobenius_norm(const ComplexMatrix& m) {
    return kernels::nrm2(2 * static_cast<std::size_t>(m.size()),
                         reinterpret_cast<const double*>(m.data()));
}

Complex trace_of(const ComplexMatrix& m) {
    require_square(m, "trace_of");
    return m.trace();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square(a, "commutator");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("commutator: operands must have identical shape");
    ComplexMatrix c(a.rows(), a.cols());
    kernels::commutator(static_cast<std::size_t>(a.rows()), a.data(), b.data(), c.data());
    return c;
}

RealVector vectorize(const ComplexMatrix& m) {
    require_square(m, "vectorize");
    const Eigen::Index nn = m.size();
    RealVector v(2 * nn);
    const Complex* p = m.data();
    for (Eigen::Index k = 0; k < nn; ++k) {
        v[k] = p[k].real();
        v[nn + k] = p[k].imag();
    }
    return v;
}

ComplexMatrix devectorize(const RealVector& v) {
    const Eigen::Index len = v.size();
    const Eigen::Index nn = len / 2;
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(nn))));
    if (len % 2 != 0 || n * n != nn)
        throw std::invalid_argument("devectorize: length is not 2*n*n for integer n");
    ComplexMatrix m(n, n);
    Complex* p = m.data();
    for (Eigen::Index k = 0; k < nn; ++k)
        p[k] = Complex(v[k], v[nn + k]);
    return m;
}

ComplexMatrix expm_skew(const ComplexMatrix& s, double tol) {
    require_square(s, "expm_skew");
    if (!is_skew_hermitian(s, tol))
        throw std::invalid_argument("expm_skew: input is not skew-Hermitian within tolerance");
    // s = i*h with h Hermitian; exp(s) = V * diag(exp(i*lambda)) * V^dagger.
    const ComplexMatrix h = Complex(0.0, -1.0) * s;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("expm_skew: eigendecomposition failed");
    const Eigen::VectorXd lambda = es.eigenvalues();
    Eigen::VectorXcd phases(lambda.size());
    for (Eigen::Index k = 0; k < lambda.size(); ++k)
        phases[k] = std::exp(Complex(0.0, lambda[k]));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace ctrlcheck
