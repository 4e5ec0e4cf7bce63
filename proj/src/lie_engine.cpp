// lie_engine.cpp — span maintenance and the commutator-closure engine.

#include "ctrlcheck/lie_engine.hpp"
#include "ctrlcheck/kernels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ctrlcheck {

namespace {

// Commutators whose norm falls below this fraction of ||a||*||b|| are pure
// round-off: a genuine zero bracket evaluated in floating point. Normalizing
// such a candidate would promote noise to a unit vector, so it is skipped.
// The cut sits well above accumulation error (~N*eps) and well below any
// direction the residual tolerance could resolve.
constexpr double kZeroCut = 1e-12;

// Candidates evaluated speculatively per parallel batch.
constexpr int kBatch = 256;

} // namespace

std::string to_string(AlgebraClass c) {
    switch (c) {
    case AlgebraClass::full_u_n:
        return "full-u(N)";
    case AlgebraClass::su_n:
        return "su(N)";
    case AlgebraClass::proper_subalgebra:
        return "proper-subalgebra";
    }
    return "unknown";
}

SpanBasis::SpanBasis(int matrix_dim, double tol)
    : n_(matrix_dim), ambient_(2 * matrix_dim * matrix_dim), tol_(tol) {
    if (matrix_dim < 1)
        throw std::invalid_argument("SpanBasis: matrix dimension must be positive");
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw std::invalid_argument("SpanBasis: tolerance must be a positive finite number");
}

const double* SpanBasis::basis_row(int k) const {
    if (k < 0 || k >= rank_)
        throw std::out_of_range("SpanBasis: basis row index out of range");
    return rows_.data() + static_cast<std::size_t>(k) * ambient_;
}

double SpanBasis::reduce_against(double* v, int upto) const {
    const auto amb = static_cast<std::size_t>(ambient_);
    for (int pass = 0; pass < 2; ++pass) {
        for (int k = 0; k < upto; ++k) {
            const double* row = rows_.data() + static_cast<std::size_t>(k) * amb;
            const double c = kernels::dot(amb, row, v);
            kernels::axpy(amb, -c, row, v);
        }
    }
    return kernels::nrm2(amb, v);
}

SpanAddResult SpanBasis::decide(std::vector<double>&& reduced, const ComplexMatrix& original,
                                double norm_before, double norm_after) {
    if (norm_before == 0.0)
        return {false, 0.0};
    const double ratio = norm_after / norm_before;
    if (ratio <= tol_)
        return {false, ratio};
    if (rank_ >= n_ * n_)
        throw std::runtime_error(
            "SpanBasis: rank exceeded N^2 independent skew-Hermitian matrices — "
            "tolerance breakdown");
    kernels::scal(static_cast<std::size_t>(ambient_), 1.0 / norm_after, reduced.data());
    rows_.insert(rows_.end(), reduced.begin(), reduced.end());
    originals_.push_back(original);
    ++rank_;
    if (ratio <= 100.0 * tol_) {
        std::ostringstream os;
        os << "basis element " << rank_ << " accepted with borderline residual ratio " << ratio
           << " (tolerance " << tol_ << ")";
        warnings_.push_back(os.str());
    }
    return {true, ratio};
}

SpanAddResult SpanBasis::add(const ComplexMatrix& m) {
    if (static_cast<int>(m.rows()) != n_ || static_cast<int>(m.cols()) != n_)
        throw std::invalid_argument("SpanBasis: matrix dimension mismatch");
    const RealVector v = vectorize(m);
    std::vector<double> w(v.data(), v.data() + v.size());
    const double before = kernels::nrm2(w.size(), w.data());
    if (before == 0.0)
        return {false, 0.0};
    const double after = reduce_against(w.data(), rank_);
    return decide(std::move(w), m, before, after);
}

double SpanBasis::membership_residual(const ComplexMatrix& m) const {
    if (static_cast<int>(m.rows()) != n_ || static_cast<int>(m.cols()) != n_)
        throw std::invalid_argument("SpanBasis: matrix dimension mismatch");
    const RealVector v = vectorize(m);
    std::vector<double> w(v.data(), v.data() + v.size());
    const double before = kernels::nrm2(w.size(), w.data());
    if (before == 0.0)
        return 0.0;
    const double after = reduce_against(w.data(), rank_);
    return after / before;
}

MembershipResult is_member(const SpanBasis& basis, const ComplexMatrix& m) {
    const double r = basis.membership_residual(m);
    return {r <= basis.tol(), r};
}

// ---------------------------------------------------------------------------
// Closure engine
// ---------------------------------------------------------------------------

struct ClosureRunner {
    SpanBasis& basis;
    std::vector<double> norms;  // Frobenius norms of basis.originals()
    long long commutators{0};
    int target{0};

    explicit ClosureRunner(SpanBasis& b) : basis(b), target(b.matrix_dim() * b.matrix_dim()) {}

    bool done() const { return basis.rank() >= target; }

    void note_accept() {
        norms.push_back(frobenius_norm(basis.originals().back()));
    }

    // One candidate, evaluated and decided immediately (serial reference).
    void candidate_serial(int l, int j) {
        ++commutators;
        const ComplexMatrix h = commutator(basis.originals()[static_cast<std::size_t>(l)],
                                           basis.originals()[static_cast<std::size_t>(j)]);
        const double f = frobenius_norm(h);
        if (f <= kZeroCut * norms[static_cast<std::size_t>(l)] * norms[static_cast<std::size_t>(j)])
            return;
        const ComplexMatrix hn = h * (1.0 / f);
        if (basis.add(hn).added)
            note_accept();
    }

    struct Speculative {
        ComplexMatrix h;
        std::vector<double> reduced;
        double before{0.0};
        double after{0.0};
        bool zero{true};
    };

    // Evaluate candidate (l, j) against the first `snapshot` basis rows
    // without touching shared state.
    void evaluate(int l, int j, int snapshot, Speculative& out) const {
        const ComplexMatrix h = commutator(basis.originals()[static_cast<std::size_t>(l)],
                                           basis.originals()[static_cast<std::size_t>(j)]);
        const double f = frobenius_norm(h);
        if (f <= kZeroCut * norms[static_cast<std::size_t>(l)] * norms[static_cast<std::size_t>(j)]) {
            out.zero = true;
            return;
        }
        out.zero = false;
        out.h = h * (1.0 / f);
        const RealVector v = vectorize(out.h);
        out.reduced.assign(v.data(), v.data() + v.size());
        out.before = kernels::nrm2(out.reduced.size(), out.reduced.data());
        out.after = basis.reduce_against(out.reduced.data(), snapshot);
    }

    // Drain one speculatively evaluated candidate in serial order. If the
    // basis grew since the snapshot, the reduction is replayed from the
    // normalized commutator, which reproduces the serial arithmetic exactly.
    void drain(Speculative&& c, int snapshot) {
        ++commutators;
        if (c.zero)
            return;
        bool added = false;
        if (basis.rank() == snapshot)
            added = basis.decide(std::move(c.reduced), c.h, c.before, c.after).added;
        else
            added = basis.add(c.h).added;
        if (added)
            note_accept();
    }

    // All pairs (l, j) with l in [lo, hi), j < l, in serial order.
    void run_pass_serial(int lo, int hi) {
        for (int l = lo; l < hi && !done(); ++l)
            for (int j = 0; j < l && !done(); ++j)
                candidate_serial(l, j);
    }

    void run_pass_parallel(int lo, int hi) {
        std::vector<std::pair<int, int>> pairs;
        for (int l = lo; l < hi; ++l)
            for (int j = 0; j < l; ++j)
                pairs.emplace_back(l, j);
        std::vector<Speculative> batch(kBatch);
        for (std::size_t base = 0; base < pairs.size() && !done(); base += kBatch) {
            const int count = static_cast<int>(std::min<std::size_t>(kBatch, pairs.size() - base));
            const int snapshot = basis.rank();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
            for (int c = 0; c < count; ++c) {
                const auto [l, j] = pairs[base + static_cast<std::size_t>(c)];
                evaluate(l, j, snapshot, batch[static_cast<std::size_t>(c)]);
            }
            for (int c = 0; c < count && !done(); ++c)
                drain(std::move(batch[static_cast<std::size_t>(c)]), snapshot);
        }
    }
};

ClosureResult generate_lie_algebra(const std::vector<ComplexMatrix>& generators, double tol) {
    if (generators.empty())
        throw std::invalid_argument("generate_lie_algebra: empty generator list");
    const Eigen::Index n = generators.front().rows();
    for (const auto& g : generators) {
        if (g.rows() != n || g.cols() != n)
            throw std::invalid_argument("generate_lie_algebra: generators must share one square shape");
        if (!is_skew_hermitian(g, tol))
            throw std::invalid_argument("generate_lie_algebra: generators must be skew-Hermitian");
    }

    ClosureResult result;
    result.basis = SpanBasis(static_cast<int>(n), tol);
    ClosureRunner runner(result.basis);
    for (const auto& g : generators)
        if (result.basis.add(g).added)
            runner.note_accept();

    const bool parallel = kernels::exec_mode() == kernels::ExecMode::parallel;
    const int target = runner.target;
    int lo = 0;
    int hi = result.basis.rank();
    while (hi > lo && !runner.done()) {
        ++result.passes;
        if (result.passes > target + 1)
            throw std::runtime_error(
                "generate_lie_algebra: closure failed to stabilize within the rank bound");
        if (parallel)
            runner.run_pass_parallel(lo, hi);
        else
            runner.run_pass_serial(lo, hi);
        lo = hi;
        hi = result.basis.rank();
    }
    result.commutators_evaluated = runner.commutators;
    result.dimension = result.basis.rank();

    if (result.dimension == target) {
        result.classification = AlgebraClass::full_u_n;
    } else if (result.dimension == target - 1) {
        const ComplexMatrix phase = Complex(0.0, 1.0) * ComplexMatrix::Identity(n, n);
        result.classification = result.basis.contains(phase) ? AlgebraClass::proper_subalgebra
                                                             : AlgebraClass::su_n;
    } else {
        result.classification = AlgebraClass::proper_subalgebra;
    }
    return result;
}

ClassifyResult classify(const ClosureResult& result, const ComplexMatrix& h0) {
    ClassifyResult out;
    out.classification = result.classification;
    const double scale = h0.size() == 0 ? 1.0 : std::max(1.0, h0.cwiseAbs().maxCoeff());
    out.trace_nonzero = std::abs(h0.trace()) > kAnalyticTol * scale;
    return out;
}

} // namespace ctrlcheck
