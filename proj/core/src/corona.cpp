#include "cyclab/corona.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "cyclab/bergman.hpp"

namespace cyclab {

namespace {

double log_sum_exp(double a, double b) {
    const double hi = std::max(a, b), lo = std::min(a, b);
    if (hi == -std::numeric_limits<double>::infinity()) return hi;
    return hi + std::log1p(std::exp(lo - hi));
}

double mass_from_constant_term(const TaylorSeries& U) {
    if (U.underflowed || U.coeffs.empty() || U.coeffs[0] == cdouble{})
        return std::numeric_limits<double>::infinity();
    return std::max(0.0, -std::log(std::abs(U.coeffs[0])));
}

SupEstimate poly_sup(const TaylorSeries& p) {
    if (p.coeffs.empty()) return {0.0, 0};
    return sup_circle_adaptive([&p](cdouble z) { return p.eval(z); }, 1.0 - 1e-4);
}

}  // namespace

InfimumResult infimum_check(const AtomicSingularMeasure& nu, std::size_t n, const DiskGrid& grid) {
    const double c = std::sqrt(nu.total_mass());
    InfimumResult out;
    out.bound_log = -2.0 * c * std::sqrt(static_cast<double>(n));
    const auto f = [&nu, n](const GridPoint& p) {
        const double log_mono =
            (n == 0) ? 0.0
                     : (p.r > 0.0 ? static_cast<double>(n) * std::log(p.r)
                                  : -std::numeric_limits<double>::infinity());
        return log_sum_exp(inner_log_abs(nu, p.z), log_mono);
    };
    const GridExtremum m = grid_min(grid.points, f);
    out.measured_inf_log = m.value;
    out.argmin = m.point.z;
    out.pass = out.measured_inf_log >= out.bound_log;
    return out;
}

InfimumResult infimum_check(const AtomicSingularMeasure& nu, std::size_t n) {
    return infimum_check(nu, n, standard_grid(40, 4096, nu.angles(), 512));
}

BezoutSolution bezout_solve(const TaylorSeries& U, std::size_t n, std::size_t d, std::size_t M) {
    if (U.coeffs.empty()) throw std::invalid_argument("bezout_solve: series has no coefficients");
    if (M < n + d) throw std::invalid_argument("bezout_solve: need M >= n + d");
    const cdouble u0 = U.coeffs[0];
    if (u0 == cdouble{} && n != 0)
        throw std::invalid_argument("bezout_solve: constant term is zero (underflowed inner data?)");

    BezoutSolution out;
    out.n = n;
    out.M = M;
    const double c = std::sqrt(mass_from_constant_term(U));
    out.corona_bound = 32.0 * std::exp(6.0 * c * std::sqrt(static_cast<double>(n)));

    const bool u_is_constant =
        std::all_of(U.coeffs.begin() + 1, U.coeffs.end(), [](cdouble a) { return a == cdouble{}; });

    if (n == 0) {
        // z^0 g = g alone solves the identity: f = 0, g = 1.
        out.f.coeffs.assign(d + 1, 0.0);
        out.g.coeffs.assign(d + 1, 0.0);
        out.g.coeffs[0] = 1.0;
    } else if (u_is_constant) {
        // U is the constant u0: f = 1/u0, g = 0.
        out.f.coeffs.assign(d + 1, 0.0);
        out.f.coeffs[0] = 1.0 / u0;
        out.g.coeffs.assign(d + 1, 0.0);
    } else {
        const Eigen::Index rows = static_cast<Eigen::Index>(M + 1);
        const Eigen::Index cols = static_cast<Eigen::Index>(2 * (d + 1));
        Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(rows, cols);
        for (std::size_t k = 0; k <= d; ++k)
            for (std::size_t m = k; m <= M && m - k < U.coeffs.size(); ++m)
                B(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)) = U.coeffs[m - k];
        for (std::size_t j = 0; j <= d; ++j)
            B(static_cast<Eigen::Index>(n + j), static_cast<Eigen::Index>(d + 1 + j)) = 1.0;
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(rows);
        rhs(0) = 1.0;

        Eigen::BDCSVD<Eigen::MatrixXcd> svd(B, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::VectorXcd x = svd.solve(rhs);
        out.rank_deficient = svd.rank() < cols;

        out.f.coeffs.assign(x.data(), x.data() + (d + 1));
        out.g.coeffs.assign(x.data() + (d + 1), x.data() + 2 * (d + 1));
    }

    // residual of the coefficient identity f U + z^n g = 1 through degree M
    TaylorSeries resid = multiply(out.f, U, M);
    for (std::size_t j = 0; j <= d && n + j <= M; ++j) resid.coeffs[n + j] += out.g.coeffs[j];
    resid.coeffs[0] -= 1.0;
    out.residual_l2 = std::sqrt(resid.h2_mass());

    const SupEstimate fs = poly_sup(out.f);
    const SupEstimate gs = poly_sup(out.g);
    out.f_sup = fs.value;
    out.g_sup = gs.value;
    out.sup_samples = std::max(fs.samples, gs.samples);
    return out;
}

Lemma3Report lemma3_report(const WeightSequence& w, const AtomicSingularMeasure& nu,
                           std::size_t n, std::size_t d, std::size_t M) {
    Lemma3Report rep;
    rep.degenerate = (n == 0) || nu.empty();
    const TaylorSeries U = inner_coeffs(nu, M);
    if (U.underflowed)
        throw std::invalid_argument("lemma3_report: inner coefficients underflowed (mass too large)");
    rep.solution = bezout_solve(U, n, d, M);

    const std::size_t deg = M + d;  // full degree of f U
    TaylorSeries one_minus_fU = multiply(rep.solution.f, U, deg);
    for (cdouble& a : one_minus_fU.coeffs) a = -a;
    one_minus_fU.coeffs[0] += 1.0;
    rep.lhs_norm = space_norm(w, one_minus_fU);

    TaylorSeries coupling = one_minus_fU;  // 1 - fU - z^n g
    for (std::size_t j = 0; j <= d && n + j <= deg; ++j)
        coupling.coeffs[n + j] -= rep.solution.g.coeffs[j];
    const double coupling_norm = space_norm(w, coupling);

    rep.rhs_bound = rep.solution.g_sup * (1.0 + 1e-6) * std::exp(-w.logw(n)) + coupling_norm;
    rep.slack = rep.rhs_bound - rep.lhs_norm;
    rep.pass = rep.slack >= 0.0;

    const double c = std::sqrt(nu.total_mass());
    const double denom = c * std::sqrt(static_cast<double>(n)) + 1.0;
    const double worst_sup = std::max(rep.solution.f_sup, rep.solution.g_sup);
    rep.a_eff = (worst_sup > 0.0) ? std::log(worst_sup) / denom : 0.0;
    return rep;
}

AeffResult measure_a_eff(const std::vector<double>& masses, const std::vector<std::size_t>& ns,
                         std::size_t d, std::size_t M) {
    AeffResult out;
    const WeightSequence flat = make_flat(M + d);
    for (double mass : masses) {
        const AtomicSingularMeasure nu = AtomicSingularMeasure::point_mass(mass, 0.0);
        for (std::size_t n : ns) {
            const Lemma3Report rep = lemma3_report(flat, nu, n, d, M);
            AeffEntry e;
            e.c = std::sqrt(mass);
            e.n = n;
            e.a_eff = rep.a_eff;
            e.residual_l2 = rep.solution.residual_l2;
            out.entries.push_back(e);
            if (!rep.degenerate) out.a_eff_max = std::max(out.a_eff_max, e.a_eff);
        }
    }
    return out;
}

CollocationBezout bezout_collocation(const std::function<cdouble(cdouble)>& F,
                                     const std::function<cdouble(cdouble)>& G, std::size_t d,
                                     const std::vector<GridPoint>& points,
                                     const std::function<double(cdouble)>& weight) {
    if (points.size() < 2 * (d + 1))
        throw std::invalid_argument("bezout_collocation: need at least 2(d+1) points");
    const Eigen::Index rows = static_cast<Eigen::Index>(points.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(2 * (d + 1));
    Eigen::MatrixXcd B(rows, cols);
    Eigen::VectorXcd rhs(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const cdouble z = points[static_cast<std::size_t>(i)].z;
        const double wt = weight(z);
        const cdouble Fz = F(z), Gz = G(z);
        cdouble zp = 1.0;
        for (std::size_t k = 0; k <= d; ++k) {
            B(i, static_cast<Eigen::Index>(k)) = wt * Fz * zp;
            B(i, static_cast<Eigen::Index>(d + 1 + k)) = wt * Gz * zp;
            zp *= z;
        }
        rhs(i) = wt;
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(B, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXcd x = svd.solve(rhs);

    CollocationBezout out;
    out.h.coeffs.assign(x.data(), x.data() + (d + 1));
    out.g.coeffs.assign(x.data() + (d + 1), x.data() + 2 * (d + 1));
    out.residual_rms = (B * x - rhs).norm() / std::sqrt(static_cast<double>(points.size()));
    out.h_sup = poly_sup(out.h).value;
    out.g_sup = poly_sup(out.g).value;
    return out;
}

}  // namespace cyclab
