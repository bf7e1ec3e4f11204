#include "cyclab/bergman.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

namespace cyclab {

namespace {

double rho(const WeightSequence& w, std::size_t n) { return std::exp(-2.0 * w.logw(n)); }

bool monotone_prefix(const WeightSequence& w, std::size_t M) {
    double prev = w.logw(0);
    for (std::size_t n = 1; n <= M; ++n) {
        const double cur = w.logw(n);
        if (cur < prev - 1e-12) return false;
        prev = cur;
    }
    return true;
}

// Column space of the least-squares problem: column k holds the weighted
// coefficients of z^k U through degree M.
Eigen::MatrixXcd design_matrix(const WeightSequence& w, const TaylorSeries& U, std::size_t N,
                               std::size_t M) {
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(M + 1),
                                                static_cast<Eigen::Index>(N + 1));
    const std::size_t dU = U.coeffs.size();  // number of stored coefficients
    for (std::size_t m = 0; m <= M; ++m) {
        const double s = std::exp(-w.logw(m));  // sqrt(rho(m))
        if (s == 0.0) continue;
        const std::size_t k_lo = (m + 1 > dU) ? (m + 1 - dU) : 0;
        const std::size_t k_hi = std::min(N, m);
        for (std::size_t k = k_lo; k <= k_hi; ++k)
            A(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)) = U.coeffs[m - k] * s;
    }
    return A;
}

DistanceResult solve_principal_block(const Eigen::MatrixXcd& G_full, double rho0, cdouble u0,
                                     std::size_t N, std::size_t M) {
    const Eigen::Index n1 = static_cast<Eigen::Index>(N + 1);
    Eigen::MatrixXcd G = G_full.topLeftCorner(n1, n1);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("gram_distance: eigendecomposition failed");
    const Eigen::VectorXd evals = es.eigenvalues();  // ascending
    const double lmax = evals(n1 - 1);
    const double lmin = evals(0);

    DistanceResult out;
    out.N = N;
    out.M = M;
    out.gram_condition = (lmin > 0.0 && lmax > 0.0) ? lmax / lmin
                                                    : std::numeric_limits<double>::infinity();

    double ridge = 0.0;
    if (!(out.gram_condition <= 1e12)) {
        ridge = 1e-14 * G.trace().real() / static_cast<double>(N + 1);
        out.ridge_applied = true;
    }

    Eigen::VectorXcd beta = Eigen::VectorXcd::Zero(n1);
    beta(0) = std::conj(u0) * rho0;

    Eigen::VectorXcd y = es.eigenvectors().adjoint() * beta;
    for (Eigen::Index i = 0; i < n1; ++i) {
        const double d = evals(i) + ridge;
        // directions that are numerically null even after the ridge are
        // projected out (truncated pseudo-inverse)
        if (d > lmax * 1e-18 && d > 0.0)
            y(i) /= d;
        else
            y(i) = cdouble{0.0, 0.0};
    }
    Eigen::VectorXcd c = es.eigenvectors() * y;

    const double cross = (beta.adjoint() * c)(0).real();
    double dist_sq = rho0 - cross;
    if (dist_sq < 0.0) {
        if (dist_sq < -1e-10)
            throw std::runtime_error("gram_distance: dist^2 = " + std::to_string(dist_sq) +
                                     " is negative beyond round-off tolerance");
        dist_sq = 0.0;
    }
    out.dist_sq = dist_sq;
    out.dist = std::sqrt(dist_sq);
    out.solution.assign(c.data(), c.data() + n1);
    return out;
}

void attach_tail_bound(const WeightSequence& w, const TaylorSeries& U, DistanceResult& r) {
    double p_mass = 0.0;
    for (const cdouble& c : r.solution) p_mass += std::norm(c);
    const double u_mass = U.h2_mass();
    if (!U.coeffs.empty() && r.M >= r.N + U.coeffs.size() - 1) {
        // every coefficient of p(z)U(z) lies at or below degree M: nothing to bound
        r.tail_bound = 0.0;
        return;
    }
    try {
        r.tail_bound = truncation_tail_bound(w, u_mass, r.M, r.N, p_mass);
    } catch (const std::invalid_argument&) {
        // non-monotone weight: fall back to the weight-free bound (omega >= 1)
        r.tail_bound = std::sqrt(p_mass * u_mass);
    }
}

}  // namespace

double space_norm(const WeightSequence& w, const TaylorSeries& f) {
    double acc = 0.0;
    for (std::size_t n = 0; n < f.coeffs.size(); ++n) acc += std::norm(f.coeffs[n]) * rho(w, n);
    return std::sqrt(acc);
}

cdouble space_inner_product(const WeightSequence& w, const TaylorSeries& f,
                            const TaylorSeries& g) {
    cdouble acc = 0.0;
    const std::size_t n_max = std::min(f.coeffs.size(), g.coeffs.size());
    for (std::size_t n = 0; n < n_max; ++n)
        acc += f.coeffs[n] * std::conj(g.coeffs[n]) * rho(w, n);
    return acc;
}

double truncation_tail_bound(const WeightSequence& w, double U_h2_mass, std::size_t M,
                             std::size_t N, double p_h2_sq) {
    if (U_h2_mass < 0.0 || p_h2_sq < 0.0)
        throw std::invalid_argument("truncation_tail_bound: negative mass");
    if (M < N) throw std::invalid_argument("truncation_tail_bound: M must be >= N");
    if (!monotone_prefix(w, M))
        throw std::invalid_argument(
            "truncation_tail_bound: weight is not monotone, bound would be invalid");
    if (U_h2_mass == 0.0 || p_h2_sq == 0.0) return 0.0;
    return std::sqrt(p_h2_sq * U_h2_mass) * std::exp(-w.logw(M - N));
}

namespace {

// Unweighted column matrix of the same sparsity as design_matrix; its
// Gramian is the partial H^2 autocorrelation of the shifts of U.
Eigen::MatrixXcd flat_design_matrix(const TaylorSeries& U, std::size_t N, std::size_t M) {
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(M + 1),
                                                static_cast<Eigen::Index>(N + 1));
    const std::size_t dU = U.coeffs.size();
    for (std::size_t m = 0; m <= M; ++m) {
        const std::size_t k_lo = (m + 1 > dU) ? (m + 1 - dU) : 0;
        const std::size_t k_hi = std::min(N, m);
        for (std::size_t k = k_lo; k <= k_hi; ++k)
            B(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)) = U.coeffs[m - k];
    }
    return B;
}

double tail_row_price(const WeightSequence& w, std::size_t M) {
    double lw;
    try {
        lw = w.logw(M + 1);
    } catch (const std::out_of_range&) {
        lw = w.logw(M);  // table-backed weight: price at the last known value
    }
    return std::exp(-2.0 * lw);
}

Eigen::MatrixXcd assemble_gram(const WeightSequence& w, const TaylorSeries& U, std::size_t N,
                               std::size_t M, GramTail tail) {
    const Eigen::MatrixXcd A = design_matrix(w, U, N, M);
    Eigen::MatrixXcd G = A.adjoint() * A;
    if (tail == GramTail::unimodular_completion) {
        const double rho_tail = tail_row_price(w, M);
        if (rho_tail > 1e-300) {
            const Eigen::MatrixXcd B = flat_design_matrix(U, N, M);
            const Eigen::Index n1 = static_cast<Eigen::Index>(N + 1);
            G += rho_tail * (Eigen::MatrixXcd::Identity(n1, n1) - B.adjoint() * B);
        }
    }
    return G;
}

}  // namespace

DistanceResult gram_distance(const WeightSequence& w, const TaylorSeries& U, std::size_t N,
                             std::size_t M, GramTail tail) {
    if (M < N) throw std::invalid_argument("gram_distance: M must be >= N");
    if (U.coeffs.empty()) throw std::invalid_argument("gram_distance: series has no coefficients");
    const Eigen::MatrixXcd G = assemble_gram(w, U, N, M, tail);
    DistanceResult r = solve_principal_block(G, rho(w, 0), U.coeffs[0], N, M);
    attach_tail_bound(w, U, r);
    return r;
}

std::vector<DistanceResult> cyclicity_scan(const WeightSequence& w,
                                           const AtomicSingularMeasure& nu,
                                           const std::vector<std::size_t>& degrees,
                                           std::size_t M, GramTail tail) {
    if (degrees.empty()) return {};
    for (std::size_t i = 1; i < degrees.size(); ++i)
        if (degrees[i] <= degrees[i - 1])
            throw std::invalid_argument("cyclicity_scan: degrees must be strictly ascending");
    const std::size_t N_max = degrees.back();
    if (M < N_max) throw std::invalid_argument("cyclicity_scan: M must be >= the largest degree");

    const TaylorSeries U = inner_coeffs(nu, M);
    const Eigen::MatrixXcd G = assemble_gram(w, U, N_max, M, tail);

    std::vector<DistanceResult> out;
    out.reserve(degrees.size());
    for (std::size_t N : degrees) {
        DistanceResult r = solve_principal_block(G, rho(w, 0), U.coeffs[0], N, M);
        attach_tail_bound(w, U, r);
        out.push_back(std::move(r));
    }
    return out;
}

DistanceResult remark3_counterexample(const AtomicSingularMeasure& nu, std::size_t N,
                                      std::size_t M) {
    if (M < 2) throw std::invalid_argument("remark3_counterexample: M must be >= 2");
    const std::size_t half = M / 2;
    const TaylorSeries U = inner_coeffs(nu, half);
    TaylorSeries U2;  // U(z^2) by index doubling
    U2.underflowed = U.underflowed;
    U2.coeffs.assign(2 * half + 1, 0.0);
    for (std::size_t i = 0; i <= half; ++i) U2.coeffs[2 * i] = U.coeffs[i];
    const WeightSequence w = make_remark3(M);
    return gram_distance(w, U2, N, M);
}

}  // namespace cyclab
