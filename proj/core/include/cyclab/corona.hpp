#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cyclab/disk_grid.hpp"
#include "cyclab/series.hpp"
#include "cyclab/weights.hpp"

namespace cyclab {

struct InfimumResult {
    double measured_inf_log = 0.0;  // grid min of log(|U(z)| + |z|^n)
    double bound_log = 0.0;         // -2 c sqrt(n), c^2 = total mass
    cdouble argmin{0.0, 0.0};
    bool pass = false;  // measured >= bound (sound: a grid min overestimates the true inf)
};

InfimumResult infimum_check(const AtomicSingularMeasure& nu, std::size_t n, const DiskGrid& grid);
// Standard grid: dyadic radii 1 - 2^-k (k = 1..40) x 4096 angles, plus 512
// angles clustered within arc distance 2^-k of every atom at each radius.
InfimumResult infimum_check(const AtomicSingularMeasure& nu, std::size_t n);

struct BezoutSolution {
    TaylorSeries f;  // degree d
    TaylorSeries g;  // degree d
    std::size_t n = 0;
    std::size_t M = 0;
    double residual_l2 = 0.0;  // sqrt( sum_{m<=M} |coef_m(fU + z^n g - 1)|^2 )
    double f_sup = 0.0;        // circle sup estimates at r = 1 - 1e-4
    double g_sup = 0.0;
    std::size_t sup_samples = 0;
    double corona_bound = 0.0;  // 2^5 delta_n^{-3} with delta_n = e^{-2 c sqrt(n)}
    bool rank_deficient = false;
};

// Least-squares surrogate for the corona solve f U + z^n g = 1: minimizes the
// coefficient-space residual over polynomials f, g of degree <= d, matching
// Taylor coefficients 0..M. No H-infinity optimality is claimed; sup norms are
// measured and reported. Requires M >= n + d and (U(0) != 0 or n == 0).
BezoutSolution bezout_solve(const TaylorSeries& U, std::size_t n, std::size_t d, std::size_t M);

struct Lemma3Report {
    BezoutSolution solution;
    double lhs_norm = 0.0;    // ||1 - f U||_{omega,2}, full product degree
    double rhs_bound = 0.0;   // g_sup (1+1e-6)/omega(n) + ||1 - fU - z^n g||_{omega,2}
    double slack = 0.0;       // rhs_bound - lhs_norm
    bool pass = false;
    double a_eff = 0.0;       // max(log f_sup, log g_sup) / (c sqrt(n) + 1)
    bool degenerate = false;  // n = 0 or empty measure; excluded from constant sweeps
};

// Verifies the norm-transfer shape ||1 - fU|| <= ||g||_inf ||z^n||_{omega,2}
// plus the coupling residual, and back-solves the effective constant used by
// pipeline planning.
Lemma3Report lemma3_report(const WeightSequence& w, const AtomicSingularMeasure& nu,
                           std::size_t n, std::size_t d, std::size_t M);

struct AeffEntry {
    double c = 0.0;
    std::size_t n = 0;
    double a_eff = 0.0;
    double residual_l2 = 0.0;
};

struct AeffResult {
    double a_eff_max = 0.0;
    std::vector<AeffEntry> entries;
};

// max of a_eff over a (mass, n) instance sweep at fixed solver sizes.
AeffResult measure_a_eff(const std::vector<double>& masses, const std::vector<std::size_t>& ns,
                         std::size_t d, std::size_t M);

struct CollocationBezout {
    TaylorSeries h;  // multiplies F
    TaylorSeries g;  // multiplies G
    double residual_rms = 0.0;  // weighted RMS of F h + G g - 1 at the points
    double h_sup = 0.0;
    double g_sup = 0.0;
};

// Value-space Bezout surrogate: minimize sum_i wt(z_i)^2 |F(z_i) h(z_i) +
// G(z_i) g(z_i) - 1|^2 over polynomials h, g of degree <= d. Used where the
// coefficient route underflows (outer factors whose coefficients span
// thousands of orders of magnitude).
CollocationBezout bezout_collocation(const std::function<cdouble(cdouble)>& F,
                                     const std::function<cdouble(cdouble)>& G, std::size_t d,
                                     const std::vector<GridPoint>& points,
                                     const std::function<double(cdouble)>& weight);

}  // namespace cyclab
