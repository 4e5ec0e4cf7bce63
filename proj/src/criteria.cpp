// criteria.cpp — implementation of the analytic criteria and witnesses.

#include "ctrlcheck/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ctrlcheck {

namespace {

const Complex kI(0.0, 1.0);

double max_abs(const std::vector<double>& xs) {
    double m = 0.0;
    for (double x : xs)
        m = std::max(m, std::abs(x));
    return m;
}

bool trace_nonzero_for(const SystemSpec& spec, double tol) {
    double tr = 0.0;
    double scale = 1.0;
    for (double e : spec.levels) {
        tr += e;
        scale = std::max(scale, std::abs(e));
    }
    return std::abs(tr) > tol * scale;
}

Conclusion conclude(bool hypothesis, bool trace_nonzero) {
    if (!hypothesis)
        return Conclusion::inconclusive;
    return trace_nonzero ? Conclusion::full_u_n : Conclusion::at_least_su_n;
}

void note_borderline(TheoremVerdict& v, const char* what, int index, double gap, double threshold) {
    std::ostringstream os;
    os << what << " gap at n=" << index << " clears the tolerance by less than 100x ("
       << gap << " vs threshold " << threshold << ")";
    v.warnings.push_back(os.str());
}

// Shared body of the two anharmonicity checks: `edge` is the distinguished
// transition index (1-based): 1 for the first criterion, N-1 for the mirror.
TheoremVerdict check_anharmonic(const SystemSpec& spec, int edge, CriterionId id, double tol) {
    const DerivedParams p = derived_params(spec);
    TheoremVerdict v;
    v.theorem_id = id;
    v.trace_nonzero = trace_nonzero_for(spec, tol);

    const double mu_edge = p.mu[static_cast<std::size_t>(edge - 1)];
    std::vector<double> mu2(p.mu.size());
    std::transform(p.mu.begin(), p.mu.end(), mu2.begin(), [](double m) { return m * m; });
    const double scale_mu = std::max(max_abs(p.mu), 1e-300);
    const double scale_mu2 = std::max(max_abs(mu2), 1e-300);

    bool ok = true;
    if (std::abs(mu_edge) <= tol * scale_mu) {
        ok = false;
        v.failing_indices.push_back(edge);
    } else if (std::abs(mu_edge) <= 100.0 * tol * scale_mu) {
        note_borderline(v, "transition frequency", edge, std::abs(mu_edge), tol * scale_mu);
    }
    const double edge2 = mu_edge * mu_edge;
    for (int n = 1; n <= spec.dim() - 1; ++n) {
        if (n == edge)
            continue;
        const double gap = std::abs(mu2[static_cast<std::size_t>(n - 1)] - edge2);
        if (gap <= tol * scale_mu2) {
            ok = false;
            v.failing_indices.push_back(n);
        } else if (gap <= 100.0 * tol * scale_mu2) {
            note_borderline(v, "squared transition frequency", n, gap, tol * scale_mu2);
        }
    }
    std::sort(v.failing_indices.begin(), v.failing_indices.end());
    v.hypothesis_holds = ok;
    v.conclusion = conclude(ok, v.trace_nonzero);
    return v;
}

// Shared body of the two ladder conditions: compare every v_n (n != edge)
// against v_edge.
TheoremVerdict check_ladder(const SystemSpec& spec, int edge, CriterionId id, double tol) {
    if (!equally_spaced(spec, tol))
        throw std::invalid_argument(
            "ladder criterion requires equally spaced levels with a nonzero common gap");
    const DerivedParams p = derived_params(spec);
    TheoremVerdict v;
    v.theorem_id = id;
    v.trace_nonzero = trace_nonzero_for(spec, tol);

    const double v_edge = p.v[static_cast<std::size_t>(edge - 1)];
    const double scale = std::max(max_abs(p.v), 1e-300);
    bool ok = true;
    for (int n = 1; n <= spec.dim() - 1; ++n) {
        if (n == edge)
            continue;
        const double gap = std::abs(p.v[static_cast<std::size_t>(n - 1)] - v_edge);
        if (gap <= tol * scale) {
            ok = false;
            v.failing_indices.push_back(n);
        } else if (gap <= 100.0 * tol * scale) {
            note_borderline(v, "ladder parameter", n, gap, tol * scale);
        }
    }
    v.hypothesis_holds = ok;
    v.conclusion = conclude(ok, v.trace_nonzero);
    return v;
}

double relative_residual(const ComplexMatrix& produced, double coefficient,
                         const ComplexMatrix& target) {
    if (coefficient == 0.0)
        throw std::invalid_argument("witness: predicted coefficient vanished");
    return frobenius_norm(produced / coefficient - target) / frobenius_norm(target);
}

// The anharmonic elimination shared by both variants. `order` lists the 1-based
// transition indices to peel, and `edge` is the surviving transition.
Witness run_anharmonic_elimination(const SystemSpec& spec, int edge, const std::vector<int>& order,
                                   CriterionId id) {
    const DerivedParams p = derived_params(spec);
    const int n = spec.dim();
    const ComplexMatrix ih0 = kI * build_h0(spec.levels);
    ComplexMatrix v = kI * build_h1(spec.dipoles);

    for (int idx : order) {
        const double mu = p.mu[static_cast<std::size_t>(idx - 1)];
        // One peel step: -[iH_0, [iH_0, V]] - mu_idx^2 * V kills the idx
        // transition while rescaling every other one.
        v = (-commutator(ih0, commutator(ih0, v)) - (mu * mu) * v).eval();
    }

    const double mu_edge = p.mu[static_cast<std::size_t>(edge - 1)];
    const double d_edge = spec.dipoles[static_cast<std::size_t>(edge - 1)];
    double coeff = d_edge;
    for (int idx : order)
        coeff *= mu_edge * mu_edge - p.mu[static_cast<std::size_t>(idx - 1)] *
                                         p.mu[static_cast<std::size_t>(idx - 1)];

    const ComplexMatrix target_i = gen_imag(edge, edge + 1, n);
    const ComplexMatrix target_r = gen_real(edge, edge + 1, n);
    const double res_i = relative_residual(v, coeff, target_i);
    // Final proof step: the paired real generator via -(1/mu)[iH_0, e^I].
    const ComplexMatrix w = -(1.0 / mu_edge) * commutator(ih0, v);
    const double res_r = relative_residual(w, coeff, target_r);

    Witness out;
    out.theorem_id = id;
    if (res_i >= res_r) {
        out.target = "e_{" + std::to_string(edge) + "," + std::to_string(edge + 1) + "}^I";
        out.coefficient = coeff;
        out.relative_residual = res_i;
        out.produced = v;
    } else {
        out.target = "e_{" + std::to_string(edge) + "," + std::to_string(edge + 1) + "}^R";
        out.coefficient = coeff;
        out.relative_residual = res_r;
        out.produced = w;
    }
    return out;
}

// One ladder elimination route. `edge` is the surviving transition (N-1 for
// the vlast condition, 1 for the v1 condition) and `order` the peel order.
Witness run_ladder_elimination(const SystemSpec& spec, int edge, const std::vector<int>& order,
                               CriterionId id) {
    const DerivedParams p = derived_params(spec);
    const int n = spec.dim();
    const ComplexMatrix ih0 = kI * build_h0(spec.levels);
    const ComplexMatrix v = kI * build_h1(spec.dipoles);
    const double mu1 = p.mu[0];

    // Raising/lowering split: vt = -(1/mu_1)[iH_0, V] is the matched real
    // combination, so plus = V + vt and minus = V - vt carry the d_n times
    // the raising resp. lowering pair sums.
    const ComplexMatrix vt = (-1.0 / mu1) * commutator(ih0, v);
    ComplexMatrix plus = v + vt;
    ComplexMatrix minus = v - vt;

    // Diagonal bracket element and its predicted closed form
    // i*diag(d_1^2, d_2^2-d_1^2, ..., -d_{N-1}^2).
    const ComplexMatrix diag = 0.25 * commutator(plus, minus);
    ComplexMatrix diag_expected = ComplexMatrix::Zero(n, n);
    auto d2 = [&](int k) {
        if (k < 1 || k > n - 1)
            return 0.0;
        const double d = spec.dipoles[static_cast<std::size_t>(k - 1)];
        return d * d;
    };
    for (int k = 1; k <= n; ++k)
        diag_expected(k - 1, k - 1) = kI * (d2(k) - d2(k - 1));
    const double res_diag =
        frobenius_norm(diag - diag_expected) / frobenius_norm(diag_expected);

    // Cross-family peeling: ad_diag swaps the raising and lowering families
    // ([diag, e^+_n] = v_n e^-_n, [diag, e^-_n] = -v_n e^+_n), so each step
    // couples the two partial sums while cancelling one shared v_n.
    for (int idx : order) {
        const double vn = p.v[static_cast<std::size_t>(idx - 1)];
        const ComplexMatrix next_plus = (-commutator(diag, minus) - vn * plus).eval();
        const ComplexMatrix next_minus = (commutator(diag, plus) - vn * minus).eval();
        plus = next_plus;
        minus = next_minus;
    }

    const double v_edge = p.v[static_cast<std::size_t>(edge - 1)];
    double coeff = spec.dipoles[static_cast<std::size_t>(edge - 1)];
    for (int idx : order)
        coeff *= v_edge - p.v[static_cast<std::size_t>(idx - 1)];

    const ComplexMatrix target_plus = gen_plus(edge, n);
    const ComplexMatrix target_minus = gen_minus(edge, n);
    const double res_plus = relative_residual(plus, coeff, target_plus);
    const double res_minus = relative_residual(minus, coeff, target_minus);

    Witness out;
    out.theorem_id = id;
    const std::string pair = "e_{" + std::to_string(edge) + "," + std::to_string(edge + 1) + "}";
    if (res_plus >= res_minus) {
        out.target = pair + "^+";
        out.relative_residual = res_plus;
        out.produced = plus;
    } else {
        out.target = pair + "^-";
        out.relative_residual = res_minus;
        out.produced = minus;
    }
    out.coefficient = coeff;
    out.relative_residual = std::max(out.relative_residual, res_diag);
    return out;
}

} // namespace

std::string to_string(CriterionId id) {
    switch (id) {
    case CriterionId::anharmonic_first:
        return "anharmonic-first";
    case CriterionId::anharmonic_last:
        return "anharmonic-last";
    case CriterionId::harmonic_v1:
        return "harmonic-v1";
    case CriterionId::harmonic_vlast:
        return "harmonic-vlast";
    }
    return "unknown";
}

std::string to_string(Conclusion c) {
    switch (c) {
    case Conclusion::full_u_n:
        return "U(N)";
    case Conclusion::at_least_su_n:
        return "at-least-SU(N)";
    case Conclusion::inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

TheoremVerdict check_anharmonic_first(const SystemSpec& spec, double tol) {
    return check_anharmonic(spec, 1, CriterionId::anharmonic_first, tol);
}

TheoremVerdict check_anharmonic_last(const SystemSpec& spec, double tol) {
    return check_anharmonic(spec, spec.dim() - 1, CriterionId::anharmonic_last, tol);
}

bool equally_spaced(const SystemSpec& spec, double tol) {
    const DerivedParams p = derived_params(spec);
    const double mean =
        std::accumulate(p.mu.begin(), p.mu.end(), 0.0) / static_cast<double>(p.mu.size());
    if (mean == 0.0)
        return false;
    double dev = 0.0;
    for (double m : p.mu)
        dev = std::max(dev, std::abs(m - mean));
    return dev <= tol * std::abs(mean);
}

TheoremVerdict check_harmonic_vlast(const SystemSpec& spec, double tol) {
    return check_ladder(spec, spec.dim() - 1, CriterionId::harmonic_vlast, tol);
}

TheoremVerdict check_harmonic_v1(const SystemSpec& spec, double tol) {
    return check_ladder(spec, 1, CriterionId::harmonic_v1, tol);
}

TheoremVerdict check_harmonic(const SystemSpec& spec, double tol) {
    const TheoremVerdict vlast = check_harmonic_vlast(spec, tol);
    const TheoremVerdict v1 = check_harmonic_v1(spec, tol);
    if (vlast.hypothesis_holds)
        return vlast;
    if (v1.hypothesis_holds)
        return v1;
    TheoremVerdict both = vlast;
    std::set<int> merged(vlast.failing_indices.begin(), vlast.failing_indices.end());
    merged.insert(v1.failing_indices.begin(), v1.failing_indices.end());
    both.failing_indices.assign(merged.begin(), merged.end());
    both.warnings.insert(both.warnings.end(), v1.warnings.begin(), v1.warnings.end());
    return both;
}

Witness witness_anharmonic(const SystemSpec& spec, double tol) {
    if (!check_anharmonic_first(spec, tol).hypothesis_holds)
        throw std::invalid_argument(
            "witness_anharmonic: the first-transition anharmonicity hypothesis does not hold");
    // Peel mu_{N-1}, mu_{N-2}, ..., mu_2; the 1-2 transition survives.
    std::vector<int> order;
    for (int idx = spec.dim() - 1; idx >= 2; --idx)
        order.push_back(idx);
    return run_anharmonic_elimination(spec, 1, order, CriterionId::anharmonic_first);
}

Witness witness_anharmonic_last(const SystemSpec& spec, double tol) {
    if (!check_anharmonic_last(spec, tol).hypothesis_holds)
        throw std::invalid_argument(
            "witness_anharmonic_last: the last-transition anharmonicity hypothesis does not hold");
    // Mirror: peel mu_1, mu_2, ..., mu_{N-2}; the (N-1)-N transition survives.
    std::vector<int> order;
    for (int idx = 1; idx <= spec.dim() - 2; ++idx)
        order.push_back(idx);
    return run_anharmonic_elimination(spec, spec.dim() - 1, order, CriterionId::anharmonic_last);
}

Witness witness_harmonic(const SystemSpec& spec, double tol) {
    const TheoremVerdict vlast = check_harmonic_vlast(spec, tol);
    const TheoremVerdict v1 = check_harmonic_v1(spec, tol);
    if (!vlast.hypothesis_holds && !v1.hypothesis_holds)
        throw std::invalid_argument("witness_harmonic: neither ladder condition holds");
    Witness worst;
    bool have = false;
    if (vlast.hypothesis_holds) {
        std::vector<int> order;
        for (int idx = 1; idx <= spec.dim() - 2; ++idx)
            order.push_back(idx);
        worst = run_ladder_elimination(spec, spec.dim() - 1, order, CriterionId::harmonic_vlast);
        have = true;
    }
    if (v1.hypothesis_holds) {
        std::vector<int> order;
        for (int idx = spec.dim() - 1; idx >= 2; --idx)
            order.push_back(idx);
        const Witness w = run_ladder_elimination(spec, 1, order, CriterionId::harmonic_v1);
        if (!have || w.relative_residual > worst.relative_residual)
            worst = w;
    }
    return worst;
}

PhaseStripped su_representative(const ComplexMatrix& u, double tol) {
    if (!is_unitary(u, tol))
        throw std::invalid_argument("su_representative: input is not unitary within tolerance");
    const Complex det = u.determinant();
    PhaseStripped out;
    out.phase = std::arg(det);  // in (-pi, pi]
    const auto n = static_cast<double>(u.rows());
    out.v = std::exp(Complex(0.0, -out.phase / n)) * u;
    return out;
}

double density_evolution_equivalence(const ComplexMatrix& u, const ComplexMatrix& rho0,
                                     double tol) {
    if (!is_hermitian(rho0, tol))
        throw std::invalid_argument("density_evolution_equivalence: rho0 is not Hermitian");
    if (std::abs(rho0.trace() - Complex(1.0, 0.0)) > tol * std::max(1.0, rho0.cwiseAbs().maxCoeff()))
        throw std::invalid_argument("density_evolution_equivalence: rho0 does not have unit trace");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho0);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("density_evolution_equivalence: eigendecomposition failed");
    if (es.eigenvalues().minCoeff() < -100.0 * tol)
        throw std::invalid_argument(
            "density_evolution_equivalence: rho0 is not positive semidefinite");
    const PhaseStripped s = su_representative(u, tol);
    return frobenius_norm(u * rho0 * u.adjoint() - s.v * rho0 * s.v.adjoint());
}

} // namespace ctrlcheck
